#include "fnclass/tables.hpp"

#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "fnclass/classify.hpp"
#include "fnclass/groups.hpp"
#include "fnclass/reference_tables.hpp"
#include "fnclass/sep_scan.hpp"
#include "fnclass/sp_expr.hpp"

namespace fnclass
{

namespace
{

std::string str( std::uint64_t v )
{
  return std::to_string( v );
}

std::string one_decimal( double v )
{
  char buf[32];
  std::snprintf( buf, sizeof( buf ), "%.1f", v );
  return buf;
}

void expect( TableArtifact& t, const std::string& cell, const std::string& got, const std::string& want )
{
  if ( got != want )
    t.mismatches.push_back( cell + ": got " + got + ", expected " + want );
}

void expect( TableArtifact& t, const std::string& cell, std::uint64_t got, std::uint64_t want )
{
  expect( t, cell, str( got ), str( want ) );
}

TableArtifact table1()
{
  TableArtifact t{ "table1", { "class", "members", "imp", "size" }, {}, {}, {} };
  const auto report = classify_space( 2, 2, { RelationKind::imp } );
  expect( t, "class count", report.classes.size(), reference::table1().size() );
  std::set<std::size_t> used;
  int row_no = 0;
  for ( const auto& row : reference::table1() )
  {
    ++row_no;
    const auto cell = "row " + std::to_string( row_no );
    std::set<std::size_t> classes;
    for ( const auto& m : row.members )
      classes.insert( *report.class_of( parse_expression( m, 2, 2 ) ) );
    if ( classes.size() != 1 )
    {
      t.mismatches.push_back( cell + ": listed members fall into " + str( classes.size() ) + " classes" );
      continue;
    }
    const auto idx = *classes.begin();
    used.insert( idx );
    const auto& c = report.classes[idx];
    expect( t, cell + " imp", c.profile.imp, row.imp );
    expect( t, cell + " size", c.size, row.size );
    std::string members;
    for ( const auto& m : row.members )
      members += ( members.empty() ? "" : "; " ) + m;
    t.rows.push_back( { str( idx + 1 ), members, str( c.profile.imp ), str( c.size ) } );
  }
  if ( used.size() != reference::table1().size() )
    t.mismatches.push_back( "rows do not map to distinct classes" );
  return t;
}

TableArtifact table3( unsigned jobs )
{
  TableArtifact t{ "table3",
                   { "sep_class", "sep", "sep_size", "sub_class", "sub", "sub_size", "imp_class", "imp", "imp_size",
                     "genus_size", "representative" },
                   {},
                   {},
                   {} };
  ClassifyOptions co{ jobs, true };
  const auto sep = classify_space( 2, 3, { RelationKind::sep }, co );
  const auto sub = classify_space( 2, 3, { RelationKind::sub }, co );
  const auto imp = classify_space( 2, 3, { RelationKind::imp }, co );
  const auto genus = classify_space( 2, 3, Relation::of_group( GroupName::GE ), co );
  expect( t, "sep class count", sep.classes.size(), 5 );
  expect( t, "sub class count", sub.classes.size(), 11 );
  expect( t, "imp class count", imp.classes.size(), 13 );
  expect( t, "genus class count", genus.classes.size(), reference::table3().size() );

  struct Placement
  {
    std::size_t sep, sub, imp, genus;
  };
  std::vector<Placement> placed;
  const auto& rows = reference::table3();
  for ( std::size_t r = 0; r < rows.size(); ++r )
  {
    const auto& row = rows[r];
    const auto cell = "row " + str( r + 1 );
    const auto f = parse_expression( row.representative, 2, 3 );
    Placement p{ *sep.class_of( f ), *sub.class_of( f ), *imp.class_of( f ), *genus.class_of( f ) };
    placed.push_back( p );
    const auto& cs = sep.classes[p.sep];
    const auto& cb = sub.classes[p.sub];
    const auto& ci = imp.classes[p.imp];
    const auto& cg = genus.classes[p.genus];
    expect( t, cell + " sep", cs.profile.sep_total(), row.sep );
    expect( t, cell + " sep size", cs.size, row.sep_size );
    expect( t, cell + " sub", cb.profile.sub_total(), row.sub );
    expect( t, cell + " sub size", cb.size, row.sub_size );
    expect( t, cell + " imp", ci.profile.imp, row.imp );
    expect( t, cell + " imp size", ci.size, row.imp_size );
    expect( t, cell + " genus size", cg.size, row.genus_size );
    t.rows.push_back( { str( p.sep + 1 ), str( cs.profile.sep_total() ), str( cs.size ), str( p.sub + 1 ),
                        str( cb.profile.sub_total() ), str( cb.size ), str( p.imp + 1 ), str( ci.profile.imp ),
                        str( ci.size ), str( cg.size ), row.representative } );
  }
  // rows share a class exactly when the published class numbers agree
  for ( std::size_t a = 0; a < rows.size(); ++a )
    for ( std::size_t b = a + 1; b < rows.size(); ++b )
    {
      const auto pair = "rows " + str( a + 1 ) + "/" + str( b + 1 );
      if ( ( rows[a].sep_class == rows[b].sep_class ) != ( placed[a].sep == placed[b].sep ) )
        t.mismatches.push_back( pair + ": sep class grouping differs" );
      if ( ( rows[a].sub_class == rows[b].sub_class ) != ( placed[a].sub == placed[b].sub ) )
        t.mismatches.push_back( pair + ": sub class grouping differs" );
      if ( ( rows[a].imp_class == rows[b].imp_class ) != ( placed[a].imp == placed[b].imp ) )
        t.mismatches.push_back( pair + ": imp class grouping differs" );
      if ( placed[a].genus == placed[b].genus )
        t.mismatches.push_back( pair + ": same genus class" );
    }

  double sep_sum = 0, sub_sum = 0, imp_sum = 0;
  for ( const auto& c : sep.classes )
    sep_sum += static_cast<double>( c.size * c.profile.sep_total() );
  for ( const auto& c : sub.classes )
    sub_sum += static_cast<double>( c.size * c.profile.sub_total() );
  for ( const auto& c : imp.classes )
    imp_sum += static_cast<double>( c.size * c.profile.imp );
  const auto& avg = reference::table3_averages();
  const double total = 256.0;
  const std::vector<std::pair<std::string, std::pair<double, double>>> averages{
      { "average sep", { sep_sum / total, avg.sep } },
      { "functions per sep class", { total / static_cast<double>( sep.classes.size() ), avg.functions_per_sep_class } },
      { "average sub", { sub_sum / total, avg.sub } },
      { "functions per sub class", { total / static_cast<double>( sub.classes.size() ), avg.functions_per_sub_class } },
      { "average imp", { imp_sum / total, avg.imp } },
      { "functions per imp class", { total / static_cast<double>( imp.classes.size() ), avg.functions_per_imp_class } },
      { "functions per genus class",
        { total / static_cast<double>( genus.classes.size() ), avg.functions_per_genus_class } },
  };
  std::vector<std::string> avg_row{ "average" };
  for ( const auto& [label, values] : averages )
  {
    expect( t, label, one_decimal( values.first ), one_decimal( values.second ) );
    avg_row.push_back( label + "=" + one_decimal( values.first ) );
  }
  t.rows.push_back( avg_row );
  return t;
}

std::optional<ClassificationReport> finished_scan( const TableOptions& options, bool run )
{
  if ( !options.cache_dir.empty() )
  {
    const auto cp = sep_scan_checkpoint( options.cache_dir );
    const auto progress = sep_scan_progress( cp );
    if ( !run && !( progress && *progress >= 1.0 ) )
      return std::nullopt;
  }
  else if ( !run )
    return std::nullopt;
  SepScanOptions so;
  if ( !options.cache_dir.empty() )
    so.checkpoint = sep_scan_checkpoint( options.cache_dir );
  so.resume = options.resume;
  so.budget_seconds = options.budget_seconds;
  so.jobs = options.jobs;
  so.progress = options.progress;
  return sep_scan_p2_5( so );
}

TableArtifact table4( const TableOptions& options )
{
  TableArtifact t{ "table4", { "n", "symmetry_types", "imp", "sub", "sep" }, {}, {}, {} };
  for ( const auto& row : reference::table4() )
  {
    const auto cell = "n=" + str( row.n );
    if ( row.n <= 4 )
    {
      const auto g = count_orbits( { GroupName::G, 2, row.n } );
      const auto counts = class_counts( 2, row.n, options.jobs );
      expect( t, cell + " symmetry types", g, row.symmetry_types );
      expect( t, cell + " imp", counts.imp, *row.imp );
      expect( t, cell + " sub", counts.sub, *row.sub );
      expect( t, cell + " sep", counts.sep, *row.sep );
      t.rows.push_back( { str( row.n ), str( g ), str( counts.imp ), str( counts.sub ), str( counts.sep ) } );
      continue;
    }
    t.skipped.push_back( cell + " symmetry types (2^32-function orbit scan not run)" );
    t.skipped.push_back( cell + " imp (not computed for five variables)" );
    std::string sep_cell = "-";
    if ( auto scan = finished_scan( options, options.run_long_scans ) )
    {
      expect( t, cell + " sep", scan->classes.size(), *row.sep );
      sep_cell = str( scan->classes.size() );
    }
    else
      t.skipped.push_back( cell + " sep (no finished five-variable scan in the cache)" );
    t.rows.push_back( { str( row.n ), "-", "-", "-", sep_cell } );
  }
  return t;
}

TableArtifact table5( const TableOptions& options )
{
  TableArtifact t{ "table5", { "class", "sep_5", "sep_4", "sep_3", "sep_2", "sep_1", "sep", "size" }, {}, {}, {} };
  const auto scan = finished_scan( options, true );
  const auto& rows = reference::table5();
  expect( t, "class count", scan->classes.size(), rows.size() );
  std::uint64_t total = 0;
  for ( std::size_t i = 0; i < scan->classes.size(); ++i )
  {
    const auto& c = scan->classes[i];
    total += c.size;
    const auto& s = c.profile.sep;
    t.rows.push_back( { str( i + 1 ), str( s[4] ), str( s[3] ), str( s[2] ), str( s[1] ), str( s[0] ),
                        str( c.profile.sep_total() ), str( c.size ) } );
    if ( i >= rows.size() )
      continue;
    std::string want, got;
    for ( int m = 4; m >= 0; --m )
    {
      want += str( rows[i].sep[m] ) + " ";
      got += str( s[m] ) + " ";
    }
    expect( t, "row " + str( i + 1 ) + " profile", got, want );
    expect( t, "row " + str( i + 1 ) + " size", c.size, rows[i].size );
  }
  expect( t, "total", total, std::uint64_t{ 1 } << 32 );
  return t;
}

TableArtifact figure4( unsigned jobs )
{
  TableArtifact t{ "figure4", { "node", "n3", "n4" }, {}, {}, {} };
  std::map<std::pair<std::string, int>, std::uint64_t> relation_counts;
  for ( int n : { 3, 4 } )
  {
    const auto counts = class_counts( 2, n, jobs );
    relation_counts[{ "imp", n }] = counts.imp;
    relation_counts[{ "sub", n }] = counts.sub;
    relation_counts[{ "sep", n }] = counts.sep;
    relation_counts[{ "identity", n }] = space_size( 2, n );
  }
  for ( const auto& e : reference::figure4() )
  {
    std::uint64_t got[2];
    for ( int i = 0; i < 2; ++i )
    {
      const int n = 3 + i;
      got[i] = e.group ? count_orbits( { *e.group, 2, n } ) : relation_counts.at( { e.node, n } );
    }
    expect( t, e.node + " n=3", got[0], e.n3 );
    expect( t, e.node + " n=4", got[1], e.n4 );
    t.rows.push_back( { e.node, str( got[0] ), str( got[1] ) } );
  }
  return t;
}

std::string csv_escape( const std::string& s )
{
  if ( s.find_first_of( ",\"\n" ) == std::string::npos )
    return s;
  std::string out = "\"";
  for ( char c : s )
    out += c == '"' ? std::string( "\"\"" ) : std::string( 1, c );
  return out + "\"";
}

} // namespace

std::string TableArtifact::csv() const
{
  std::ostringstream os;
  for ( std::size_t i = 0; i < columns.size(); ++i )
    os << ( i ? "," : "" ) << csv_escape( columns[i] );
  os << '\n';
  for ( const auto& row : rows )
  {
    for ( std::size_t i = 0; i < row.size(); ++i )
      os << ( i ? "," : "" ) << csv_escape( row[i] );
    os << '\n';
  }
  return os.str();
}

nlohmann::json TableArtifact::json() const
{
  return { { "table", name },
           { "columns", columns },
           { "rows", rows },
           { "matches", matches() },
           { "mismatches", mismatches },
           { "skipped", skipped } };
}

const std::vector<std::string>& table_names()
{
  static const std::vector<std::string> names{ "table1", "table3", "table4", "table5", "figure4" };
  return names;
}

std::filesystem::path sep_scan_checkpoint( const std::filesystem::path& cache_dir )
{
  return cache_dir / "sep-scan-k2-n5.ckpt";
}

TableArtifact reproduce_table( const std::string& name, const TableOptions& options )
{
  if ( name == "table1" )
    return table1();
  if ( name == "table3" )
    return table3( options.jobs );
  if ( name == "table4" )
    return table4( options );
  if ( name == "table5" )
    return table5( options );
  if ( name == "figure4" )
    return figure4( options.jobs );
  throw std::invalid_argument( "unknown table '" + name + "'" );
}

} // namespace fnclass
