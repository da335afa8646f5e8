#include "fnclass/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fnclass/classify.hpp"
#include "fnclass/diagram.hpp"
#include "fnclass/groups.hpp"
#include "fnclass/report_io.hpp"
#include "fnclass/sep_scan.hpp"
#include "fnclass/separability.hpp"
#include "fnclass/sp_expr.hpp"
#include "fnclass/tables.hpp"
#include "fnclass/verify.hpp"

namespace fnclass
{

namespace
{

struct RunConfig
{
  int k = 2;
  std::optional<int> n;
  std::string table;
  std::string expr;
  std::string ordering;
  std::string relation;
  std::string group;
  std::string set;
  std::string format;
  std::string out;
  unsigned jobs = 1;
  std::string cache_dir;
  std::uint64_t seed = 1;
  std::uint64_t samples = 0;
  bool resume = false;
  double budget = 0;
  bool mutant = false;
  bool diff = false;
  bool run_scan = false;
  std::string table_name;

  std::filesystem::path cache() const
  {
    if ( const char* env = std::getenv( "FNCLASS_CACHE" ); env && *env )
      return env;
    return cache_dir;
  }
};

/// Usage problems detected after parsing.
struct UsageError : std::invalid_argument
{
  using std::invalid_argument::invalid_argument;
};

std::string vector_text( const std::vector<std::uint64_t>& v )
{
  std::string s;
  for ( auto x : v )
    s += ( s.empty() ? "" : " " ) + std::to_string( x );
  return s;
}

std::string sets_text( const std::vector<VarSet>& sets )
{
  std::string s;
  for ( auto v : sets )
    s += ( s.empty() ? "" : " " ) + v.to_string();
  return s.empty() ? "-" : s;
}

KFunction load_function( const RunConfig& cfg )
{
  if ( cfg.table.empty() == cfg.expr.empty() )
    throw UsageError( "give exactly one of --table or --expr" );
  if ( !cfg.expr.empty() )
    return parse_expression( cfg.expr, cfg.k, cfg.n );
  if ( !cfg.n )
    throw UsageError( "--table needs --n" );
  return parse_table( cfg.table, cfg.k, *cfg.n );
}

std::vector<int> parse_ordering( const std::string& text, int n )
{
  if ( text.empty() )
  {
    std::vector<int> o( n );
    for ( int i = 0; i < n; ++i )
      o[i] = i + 1;
    return o;
  }
  std::vector<int> o;
  std::string digits;
  auto flush = [&] {
    if ( !digits.empty() )
      o.push_back( std::stoi( digits ) );
    digits.clear();
  };
  for ( char c : text )
  {
    if ( std::isdigit( static_cast<unsigned char>( c ) ) )
      digits += c;
    else if ( c == ',' || c == ';' || c == ' ' || c == '<' || c == '>' )
      flush();
    else
      throw UsageError( "bad ordering '" + text + "'" );
  }
  flush();
  return o;
}

void write_file( const std::string& path, const std::string& text )
{
  std::ofstream os( path );
  if ( !os )
    throw std::runtime_error( "cannot write " + path );
  os << text;
}

int cmd_analyze( const RunConfig& cfg, std::ostream& out )
{
  const auto f = load_function( cfg );
  const auto e = essential_set( f );
  const auto profile = complexity_profile( f );
  const auto sep = separable_sets( f );
  nlohmann::json j = profile_json( f, profile );
  j["sp"] = to_sp( f );
  j["essential"] = e.members();
  j["strongly_essential"] = strongly_essential_set( f ).members();
  j["range"] = range_of( f );
  std::vector<std::vector<int>> sep_json;
  for ( auto s : sep )
    sep_json.push_back( s.members() );
  j["separable_sets"] = sep_json;

  std::string dis_text;
  if ( !cfg.set.empty() )
  {
    const auto M = parse_varset( cfg.set );
    const auto dis = distributive_sets( M, f );
    const auto systems = s_systems( dis );
    std::vector<std::vector<int>> dj, sj;
    for ( auto s : dis.sets() )
      dj.push_back( s.members() );
    for ( auto s : systems )
      sj.push_back( s.members() );
    j["dis"] = { { "set", M.members() }, { "separable", M.empty() ? false : is_separable( f, M ) },
                 { "distributive_sets", dj }, { "s_systems", sj } };
    dis_text = "dis " + M.to_string() + ": " + sets_text( dis.sets() ) + "\ns-systems: " + sets_text( systems ) + "\n";
  }

  if ( cfg.format == "json" )
  {
    out << j.dump( 2 ) << '\n';
    return exit_ok;
  }
  if ( cfg.format == "csv" )
  {
    out << profile_csv_header() << '\n' << profile_csv_row( f, profile ) << '\n';
    return exit_ok;
  }
  out << "function: " << format_table( f ) << " (k=" << f.k() << ", n=" << f.n() << ")\n"
      << "sp: " << to_sp( f ) << '\n'
      << "ess: " << e.size() << ' ' << e.to_string() << '\n'
      << "strongly essential: " << strongly_essential_set( f ).to_string() << '\n'
      << "range: ";
  for ( auto v : range_of( f ) )
    out << int( v ) << ' ';
  out << "\nsub: " << profile.sub_total() << " (by ess: " << vector_text( profile.sub ) << ")\n"
      << "sep: " << profile.sep_total() << " (by size: " << vector_text( profile.sep ) << ")\n"
      << "separable sets: " << sets_text( sep ) << '\n'
      << "imp: " << profile.imp << '\n'
      << dis_text;
  return exit_ok;
}

int cmd_diagram( const RunConfig& cfg, std::ostream& out )
{
  const auto f = load_function( cfg );
  const auto d = build_odd( f, parse_ordering( cfg.ordering, f.n() ) );
  const auto dot = to_dot( d );
  const auto imps = implementations_of( d );
  if ( cfg.format == "json" )
  {
    nlohmann::json j{ { "table", format_table( f ) },        { "ordering", d.ordering() },
                      { "depth", depth( d ) },               { "imp", imps.size() },
                      { "internal_nodes", d.internal_count() }, { "terminals", d.terminal_count() },
                      { "implementations", implementations_json( imps ) } };
    if ( cfg.out.empty() )
      j["dot"] = dot;
    out << j.dump( 2 ) << '\n';
  }
  else
  {
    out << "depth: " << depth( d ) << '\n'
        << "imp: " << imps.size() << '\n'
        << "internal nodes: " << d.internal_count() << '\n'
        << "terminals: " << d.terminal_count() << '\n';
    for ( const auto& i : imps )
      out << "implementation: " << i.to_string() << '\n';
    if ( cfg.out.empty() )
      out << dot;
  }
  if ( !cfg.out.empty() )
    write_file( cfg.out, dot );
  return exit_ok;
}

void emit_report( const RunConfig& cfg, const ClassificationReport& report, std::ostream& out,
                  const std::optional<std::vector<OrbitRecord>>& transversal )
{
  const auto csv = transversal ? transversal_csv( *transversal ) : report_csv( report );
  const auto json = report_json( report ).dump( 2 ) + "\n";
  if ( !cfg.out.empty() )
  {
    write_file( cfg.out + ".csv", csv );
    write_file( cfg.out + ".json", json );
    out << "classes: " << report.classes.size() << "\nwrote " << cfg.out << ".csv and " << cfg.out << ".json\n";
    return;
  }
  if ( cfg.format == "json" )
    out << json;
  else if ( cfg.format == "text" )
  {
    out << "relation: " << report.relation << " k=" << report.k << " n=" << report.n << '\n'
        << "classes: " << report.classes.size() << '\n';
    for ( std::size_t i = 0; i < report.classes.size(); ++i )
    {
      const auto& c = report.classes[i];
      out << i + 1 << ": size " << c.size << ", imp " << c.profile.imp << ", sub " << c.profile.sub_total()
          << ", sep " << c.profile.sep_total() << " [" << vector_text( c.profile.sep ) << "], representative "
          << format_table( c.representative ) << '\n';
    }
  }
  else
    out << csv;
}

int cmd_classify( const RunConfig& cfg, std::ostream& out, std::ostream& err )
{
  if ( !cfg.n )
    throw UsageError( "classify needs --n" );
  if ( !cfg.relation.empty() && !cfg.group.empty() )
    throw UsageError( "give either --relation or --group" );
  const auto relation = cfg.group.empty() ? Relation::parse( cfg.relation.empty() ? "imp" : cfg.relation )
                                          : Relation::of_group( parse_group_name( cfg.group ) );
  const int k = cfg.k, n = *cfg.n;
  const auto cache = cfg.cache();

  if ( relation.kind == RelationKind::sep && k == 2 && n == 5 )
  {
    SepScanOptions so;
    if ( !cache.empty() )
      so.checkpoint = sep_scan_checkpoint( cache );
    so.resume = cfg.resume || !cache.empty();
    so.budget_seconds = cfg.budget;
    so.jobs = cfg.jobs;
    so.progress = [&err]( std::uint64_t done, std::uint64_t total ) {
      err << "\rscanned " << done << " / " << total << std::flush;
      if ( done == total )
        err << '\n';
    };
    emit_report( cfg, sep_scan_p2_5( so ), out, std::nullopt );
    return exit_ok;
  }

  std::optional<ReportCache> store;
  if ( !cache.empty() )
    store.emplace( cache );
  std::optional<ClassificationReport> report;
  if ( store && cfg.resume )
    report = store->load( k, n, relation.name() );
  if ( !report )
  {
    report = classify_space( k, n, relation, { cfg.jobs, true } );
    if ( store )
      store->store( *report );
  }
  std::optional<std::vector<OrbitRecord>> transversal;
  if ( relation.kind == RelationKind::group )
  {
    transversal.emplace();
    for ( const auto& c : report->classes )
      transversal->push_back( { c.representative, c.size } );
  }
  emit_report( cfg, *report, out, transversal );
  return exit_ok;
}

int cmd_tables( const RunConfig& cfg, std::ostream& out, std::ostream& err )
{
  TableOptions to;
  to.jobs = cfg.jobs;
  to.cache_dir = cfg.cache();
  to.resume = true;
  to.budget_seconds = cfg.budget;
  to.run_long_scans = cfg.run_scan;
  to.progress = [&err]( std::uint64_t done, std::uint64_t total ) {
    err << "\rscanned " << done << " / " << total << std::flush;
    if ( done == total )
      err << '\n';
  };
  const auto names = cfg.table_name == "all" ? table_names() : std::vector<std::string>{ cfg.table_name };
  bool all_match = true;
  nlohmann::json combined = nlohmann::json::array();
  for ( const auto& name : names )
  {
    const auto t = reproduce_table( name, to );
    all_match = all_match && t.matches();
    if ( cfg.format == "json" )
      combined.push_back( t.json() );
    else
    {
      if ( names.size() > 1 )
        out << "# " << name << '\n';
      out << t.csv();
    }
    if ( !cfg.out.empty() )
      write_file( cfg.out + "-" + name + ".csv", t.csv() );
    if ( cfg.diff || !t.matches() )
    {
      err << name << ": " << ( t.matches() ? "matches" : "MISMATCH" ) << '\n';
      for ( const auto& m : t.mismatches )
        err << "  " << m << '\n';
      for ( const auto& s : t.skipped )
        err << "  skipped " << s << '\n';
    }
  }
  if ( cfg.format == "json" )
    out << ( combined.size() == 1 ? combined[0] : combined ).dump( 2 ) << '\n';
  return all_match ? exit_ok : exit_failure;
}

int cmd_verify( const RunConfig& cfg, std::ostream& out )
{
  VerifyOptions vo;
  vo.k = cfg.k;
  vo.n = cfg.n.value_or( 3 );
  vo.samples = cfg.samples;
  vo.seed = cfg.seed;
  vo.jobs = cfg.jobs;
  vo.mutant = cfg.mutant;
  const auto report = run_verify( vo );
  if ( cfg.format == "json" )
  {
    auto arr = nlohmann::json::array();
    for ( const auto& c : report.checks )
      arr.push_back( { { "check", c.name },
                       { "passed", c.passed() },
                       { "cases", c.cases },
                       { "failures", c.failures },
                       { "counterexample", c.counterexample } } );
    out << nlohmann::json{ { "k", vo.k }, { "n", vo.n }, { "samples", vo.samples }, { "checks", arr } }.dump( 2 )
        << '\n';
  }
  else
    for ( const auto& c : report.checks )
    {
      out << ( c.passed() ? "PASS " : "FAIL " ) << c.name << " cases=" << c.cases;
      if ( !c.passed() )
        out << " failures=" << c.failures << " counterexample=" << c.counterexample;
      out << '\n';
    }
  return report.passed() ? exit_ok : exit_failure;
}

int cmd_parse( const RunConfig& cfg, std::ostream& out )
{
  if ( cfg.expr.empty() )
    throw UsageError( "parse needs --expr" );
  const auto f = parse_expression( cfg.expr, cfg.k, cfg.n );
  if ( cfg.format == "json" )
    out << nlohmann::json{ { "k", f.k() }, { "n", f.n() }, { "table", format_table( f ) }, { "sp", to_sp( f ) } }.dump( 2 )
        << '\n';
  else
    out << "k: " << f.k() << "\nn: " << f.n() << "\ntable: " << format_table( f ) << "\nsp: " << to_sp( f ) << '\n';
  return exit_ok;
}

} // namespace

int run_cli( int argc, const char* const* argv, std::ostream& out, std::ostream& err )
{
  RunConfig cfg;
  CLI::App app{ "Complexity measures and classification of finite-valued functions", "fnclass" };
  app.require_subcommand( 1 );

  auto add_function = [&]( CLI::App* sub ) {
    sub->add_option( "--k", cfg.k, "radix" )->check( CLI::Range( 2, 255 ) );
    sub->add_option( "--n", cfg.n, "arity" )->check( CLI::Range( 0, 31 ) );
    sub->add_option( "--table", cfg.table, "truth table: hex for k=2, digit list otherwise" );
    sub->add_option( "--expr", cfg.expr, "SP expression, e.g. \"x1*x2 + x1^0*x3\"" );
  };
  auto add_format = [&]( CLI::App* sub, std::vector<std::string> formats ) {
    sub->add_option( "--format", cfg.format, "output format" )->check( CLI::IsMember( std::move( formats ) ) );
    sub->add_option( "--out", cfg.out, "output file (prefix for classify/tables)" );
  };
  auto add_run = [&]( CLI::App* sub ) {
    sub->add_option( "--jobs", cfg.jobs, "worker threads" )->check( CLI::Range( 1u, 1024u ) );
    sub->add_option( "--cache-dir", cfg.cache_dir, "cache directory (FNCLASS_CACHE overrides)" );
    sub->add_flag( "--resume", cfg.resume, "reuse cached results and checkpoints" );
    sub->add_option( "--budget", cfg.budget, "time budget in seconds for long scans" )->check( CLI::PositiveNumber );
  };

  auto* analyze = app.add_subcommand( "analyze", "essential variables, profiles and distributive sets" );
  add_function( analyze );
  add_format( analyze, { "text", "json", "csv" } );
  analyze->add_option( "--set", cfg.set, "variable set for a distributive-set query, e.g. 2,3" );

  auto* diagram = app.add_subcommand( "diagram", "reduced ordered decision diagram as DOT" );
  add_function( diagram );
  add_format( diagram, { "text", "json", "dot" } );
  diagram->add_option( "--ordering", cfg.ordering, "variable ordering, e.g. 2,1,3" );

  auto* classify = app.add_subcommand( "classify", "partition a function space" );
  classify->add_option( "--k", cfg.k, "radix" )->check( CLI::Range( 2, 255 ) );
  classify->add_option( "--n", cfg.n, "arity" )->check( CLI::Range( 0, 31 ) );
  classify->add_option( "--relation", cfg.relation, "imp, sub, sep or a group name" );
  classify->add_option( "--group", cfg.group, "s, ca, g, ge, cf, lf, lg, a, axa1, rag, fullsym" );
  add_format( classify, { "csv", "json", "text" } );
  add_run( classify );

  auto* tables = app.add_subcommand( "tables", "reproduce a published table and diff it" );
  tables->add_option( "name", cfg.table_name, "table1, table3, table4, table5, figure4 or all" )
      ->required()
      ->check( CLI::IsMember( { "table1", "table3", "table4", "table5", "figure4", "all" } ) );
  tables->add_flag( "--diff", cfg.diff, "print the cell-by-cell diff" );
  tables->add_flag( "--run-scan", cfg.run_scan, "table4: run the five-variable sep scan if not cached" );
  add_format( tables, { "csv", "json" } );
  add_run( tables );

  auto* verify = app.add_subcommand( "verify", "check structural invariants" );
  verify->add_option( "--k", cfg.k, "radix" )->check( CLI::Range( 2, 255 ) );
  verify->add_option( "--n", cfg.n, "arity" )->check( CLI::Range( 0, 31 ) );
  verify->add_option( "--samples", cfg.samples, "random tables instead of the whole space" );
  verify->add_option( "--seed", cfg.seed, "random seed" );
  verify->add_option( "--jobs", cfg.jobs, "worker threads" )->check( CLI::Range( 1u, 1024u ) );
  verify->add_flag( "--mutant", cfg.mutant, "negative control: skip redundant-node removal" );
  add_format( verify, { "text", "json" } );

  auto* parse = app.add_subcommand( "parse", "parse an SP expression" );
  add_function( parse );
  add_format( parse, { "text", "json" } );

  try
  {
    app.parse( argc, argv );
  }
  catch ( const CLI::CallForHelp& )
  {
    out << app.help();
    return exit_ok;
  }
  catch ( const CLI::CallForAllHelp& )
  {
    out << app.help( "", CLI::AppFormatMode::All );
    return exit_ok;
  }
  catch ( const CLI::ParseError& e )
  {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  }

  try
  {
    if ( analyze->parsed() )
      return cmd_analyze( cfg, out );
    if ( diagram->parsed() )
      return cmd_diagram( cfg, out );
    if ( classify->parsed() )
      return cmd_classify( cfg, out, err );
    if ( tables->parsed() )
      return cmd_tables( cfg, out, err );
    if ( verify->parsed() )
      return cmd_verify( cfg, out );
    if ( parse->parsed() )
      return cmd_parse( cfg, out );
  }
  catch ( const budget_exceeded& e )
  {
    err << "budget exceeded: " << e.what() << '\n';
    return exit_budget;
  }
  catch ( const std::invalid_argument& e )
  {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  catch ( const std::out_of_range& e )
  {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  catch ( const std::exception& e )
  {
    err << "error: " << e.what() << '\n';
    return exit_failure;
  }
  return exit_usage;
}

} // namespace fnclass
