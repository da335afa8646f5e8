#include "fnclass/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "fnclass/bit_kernels.hpp"
#include "fnclass/classify.hpp"
#include "fnclass/diagram.hpp"
#include "fnclass/groups.hpp"
#include "fnclass/separability.hpp"
#include "fnclass/sp_expr.hpp"

namespace fnclass
{

bool VerifyReport::passed() const
{
  return std::all_of( checks.begin(), checks.end(), []( const auto& c ) { return c.passed(); } );
}

const CheckResult* VerifyReport::find( const std::string& name ) const
{
  for ( const auto& c : checks )
    if ( c.name == name )
      return &c;
  return nullptr;
}

namespace
{

constexpr std::uint64_t no_index = std::numeric_limits<std::uint64_t>::max();

/// Results of one worker, in first-use order of check names.
class Ledger
{
public:
  void record( const std::string& name, bool ok, std::uint64_t index, const KFunction& f, const std::string& detail = {} )
  {
    auto& e = entry( name );
    ++e.result.cases;
    if ( ok )
      return;
    ++e.result.failures;
    if ( index < e.first_failure )
    {
      e.first_failure = index;
      e.result.counterexample = format_table( f ) + ( detail.empty() ? "" : " (" + detail + ")" );
    }
  }

  /// Registers a check that may see no cases.
  void declare( const std::string& name ) { entry( name ); }

  void merge( const Ledger& other )
  {
    for ( const auto& name : other.order_ )
    {
      const auto& src = other.entries_.at( name );
      auto& dst = entry( name );
      dst.result.cases += src.result.cases;
      dst.result.failures += src.result.failures;
      if ( src.first_failure < dst.first_failure )
      {
        dst.first_failure = src.first_failure;
        dst.result.counterexample = src.result.counterexample;
      }
    }
  }

  std::vector<CheckResult> results() const
  {
    std::vector<CheckResult> out;
    for ( const auto& name : order_ )
      out.push_back( entries_.at( name ).result );
    return out;
  }

private:
  struct Entry
  {
    CheckResult result;
    std::uint64_t first_failure = no_index;
  };

  Entry& entry( const std::string& name )
  {
    auto [it, fresh] = entries_.try_emplace( name );
    if ( fresh )
    {
      it->second.result.name = name;
      order_.push_back( name );
    }
    return it->second;
  }

  std::map<std::string, Entry> entries_;
  std::vector<std::string> order_;
};

std::string set_list( const std::vector<VarSet>& sets )
{
  std::string s;
  for ( auto v : sets )
    s += v.to_string();
  return s;
}

std::vector<std::vector<int>> orderings_to_check( int n )
{
  std::vector<int> p( n );
  std::iota( p.begin(), p.end(), 1 );
  std::vector<std::vector<int>> out;
  if ( n <= 5 )
  {
    do
      out.push_back( p );
    while ( std::next_permutation( p.begin(), p.end() ) );
  }
  else
  {
    out.push_back( p );
    std::reverse( p.begin(), p.end() );
    out.push_back( p );
  }
  return out;
}

std::vector<VarSet> nonempty_subsets( VarSet e )
{
  const auto members = e.members();
  std::vector<VarSet> out;
  for ( std::uint32_t mask = 1; mask < ( 1u << members.size() ); ++mask )
  {
    VarSet s;
    for ( std::size_t b = 0; b < members.size(); ++b )
      if ( ( mask >> b ) & 1u )
        s.insert( members[b] );
    out.push_back( s );
  }
  return out;
}

VarPermValueMaps random_value_maps( int k, int n, std::mt19937_64& rng )
{
  VarPermValueMaps t;
  t.perm.resize( n );
  std::iota( t.perm.begin(), t.perm.end(), 1 );
  std::shuffle( t.perm.begin(), t.perm.end(), rng );
  std::vector<Value> id( k );
  std::iota( id.begin(), id.end(), Value{ 0 } );
  for ( int i = 0; i < n; ++i )
  {
    auto s = id;
    std::shuffle( s.begin(), s.end(), rng );
    t.value_maps.push_back( s );
  }
  t.output_map = id;
  std::shuffle( t.output_map.begin(), t.output_map.end(), rng );
  return t;
}

std::uint64_t binomial( int n, int m )
{
  std::uint64_t r = 1;
  for ( int i = 1; i <= m; ++i )
    r = r * ( n - m + i ) / i;
  return r;
}

void check_function( const KFunction& f, std::uint64_t index, const VerifyOptions& opt, Ledger& L )
{
  const int k = f.k(), n = f.n();
  const auto e = essential_set( f );
  const auto sep_sets = separable_sets( f );
  const std::set<VarSet> sep( sep_sets.begin(), sep_sets.end() );
  const auto subs = subfunctions( f );

  // separability oracle and profile consistency
  {
    bool ok = true;
    VarSet bad;
    for ( auto M : nonempty_subsets( e ) )
      if ( is_separable( f, M ) != sep.contains( M ) )
      {
        ok = false;
        bad = M;
      }
    L.record( "separable-oracle-agreement", ok, index, f, ok ? "" : "M=" + bad.to_string() );

    const auto sv = sub_vector( f );
    const auto pv = sep_vector( f );
    bool sums = std::accumulate( sv.begin(), sv.end(), std::uint64_t{ 0 } ) == subs.size() &&
                std::accumulate( pv.begin(), pv.end(), std::uint64_t{ 0 } ) == sep.size();
    for ( int m = 1; m <= n; ++m )
      sums = sums && pv[m - 1] <= binomial( e.size(), m );
    L.record( "profile-sums", sums, index, f );

    if ( k == 2 && n <= bits::max_vars )
    {
      const auto w = bits::to_word( f );
      const bool agree = bits::sep_vector_word( w, n ) == pv && bits::sub_vector_word( w, n ) == sv &&
                         bits::essential_mask_word( w ) == e.bits();
      L.record( "word-kernel-agreement", agree, index, f );
    }
  }

  // distributive sets and s-systems of inseparable sets
  for ( auto M : nonempty_subsets( e ) )
  {
    if ( M == e || sep.contains( M ) )
      continue;
    const auto dis = distributive_sets( M, f );
    const auto systems = s_systems( dis );
    L.record( "s-system-exists", !dis.empty() && !systems.empty(), index, f, "M=" + M.to_string() );
    L.record( "s-system-minimal-transversal", systems == minimal_transversals( dis ), index, f,
              "M=" + M.to_string() + " s=" + set_list( systems ) );
    for ( auto beta : systems )
    {
      L.record( "extension-separable", sep.contains( M | beta ), index, f,
                "M=" + M.to_string() + " beta=" + beta.to_string() );
      bool minimal = true;
      const auto bm = beta.members();
      for ( std::uint32_t mask = 0; mask + 1 < ( 1u << bm.size() ); ++mask )
      {
        VarSet alpha;
        for ( std::size_t b = 0; b < bm.size(); ++b )
          if ( ( mask >> b ) & 1u )
            alpha.insert( bm[b] );
        if ( sep.contains( M | alpha ) )
          minimal = false;
      }
      L.record( "extension-minimal", minimal, index, f, "M=" + M.to_string() + " beta=" + beta.to_string() );
      // each member of beta is the only member of some distributive set,
      // and fixing that whole set blocks M; the variable alone need not
      for ( int x : bm )
      {
        const bool blocks = std::any_of( dis.sets().begin(), dis.sets().end(), [&]( VarSet J ) {
          return ( J & beta ) == VarSet{ x } && is_blocking( f, M, J );
        } );
        L.record( "s-system-distributive-blocks", blocks, index, f, "M=" + M.to_string() + " x" + std::to_string( x ) );
      }
    }
    bool hereditary = true;
    for ( const auto& g : subs )
      if ( M.is_subset_of( essential_set( g ) ) && is_separable( g, M ) )
        hereditary = false;
    L.record( "inseparability-hereditary", hereditary, index, f, "M=" + M.to_string() );

    const auto ordering = find_shallow_ordering( f, M );
    const bool head_ok = std::any_of( systems.begin(), systems.end(),
                                      [&]( VarSet b ) { return b.contains( ordering.front() ); } );
    L.record( "shallow-ordering", head_ok && depth( build_odd( f, ordering ) ) < e.size() + 1, index, f,
              "M=" + M.to_string() );
  }

  // diagrams
  const ReduceOptions reduce_options{ true, !opt.mutant };
  for ( const auto& o : orderings_to_check( n ) )
  {
    const auto tree = build_odt( f, o );
    const auto d = reduce( tree, reduce_options );
    L.record( "labels-equal-essential", diagram_labels( d ) == e, index, f );
    const auto canonical = reduce( tree );
    L.record( "reduction-canonical", reduce( tree ) == canonical && reduce( canonical ) == canonical, index, f );
    L.record( "depth-bound", depth( canonical ) <= e.size() + 1, index, f );
    bool sound = true;
    for ( std::size_t idx = 0; idx < f.size(); ++idx )
    {
      const auto p = f.point_of( idx );
      if ( evaluate( d, p ) != f[idx] )
        sound = false;
    }
    L.record( "reduction-sound", sound, index, f );
  }
  if ( !e.empty() )
  {
    const auto o = find_full_depth_ordering( f );
    L.record( "full-depth-ordering", depth( build_odd( f, o ) ) == e.size() + 1, index, f );
  }

  const auto imps = implementations( f );
  for ( auto M : nonempty_subsets( e ) )
  {
    // only full-length implementations: a short path such as (23,000) of
    // x1x2 + x1^0x3 ends in {2,3} although that set is inseparable
    const bool suffix = std::any_of( imps.begin(), imps.end(), [M, &e]( const Implementation& i ) {
      if ( static_cast<int>( i.vars.size() ) != e.size() )
        return false;
      return VarSet::from_members( std::span<const int>( i.vars ).last( M.size() ) ) == M;
    } );
    L.record( "separable-iff-implementation-suffix", suffix == sep.contains( M ), index, f, "M=" + M.to_string() );
  }
  for ( int x : e.members() )
  {
    const bool ends = std::any_of( imps.begin(), imps.end(),
                                   [x]( const Implementation& i ) { return !i.vars.empty() && i.vars.back() == x; } );
    L.record( "essential-variable-ends-implementation", ends, index, f, "x" + std::to_string( x ) );
  }
  if ( k == 2 )
    L.record( "imp-recursion-matches-enumeration", imp_count( f ) == imps.size(), index, f );

  // strongly essential variables
  {
    const int strong = strongly_essential_set( f ).size();
    const int need = std::min( e.size(), 2 );
    L.record( "strongly-essential-count", strong >= need, index, f );
  }

  // subfunction chains
  for ( const auto& g : subs )
  {
    const auto chain = subfunction_chain( f, g );
    bool ok = chain.front() == g && chain.back() == f;
    for ( std::size_t i = 0; ok && i + 1 < chain.size(); ++i )
    {
      const auto lo = chain[i], hi = chain[i + 1];
      bool link = ess( lo ) + 1 == ess( hi );
      bool is_cofactor = false;
      for ( int x : essential_set( hi ).members() )
        for ( int c = 0; c < k; ++c )
          if ( cofactor( hi, x, static_cast<Value>( c ) ) == lo )
            is_cofactor = true;
      ok = link && is_cofactor;
    }
    L.record( "subfunction-chain", ok, index, f, "to " + format_table( g ) );
  }

  // invariance under output permutations and value maps
  const auto profile = complexity_profile( f );
  {
    std::vector<Value> sigma( k );
    std::iota( sigma.begin(), sigma.end(), Value{ 0 } );
    do
    {
      const auto g = apply( OutputMap{ sigma }, f );
      const auto p = complexity_profile( g );
      L.record( "output-permutation-invariance", p.imp == profile.imp && p.sub == profile.sub, index, f );
    } while ( k <= 4 && std::next_permutation( sigma.begin(), sigma.end() ) );
  }
  {
    std::mt19937_64 rng( opt.seed * 0x9e3779b97f4a7c15ull + index );
    for ( int r = 0; r < 2; ++r )
    {
      const auto g = apply( random_value_maps( k, n, rng ), f );
      L.record( "value-map-invariance", complexity_profile( g ) == profile, index, f );
    }
  }
}

void check_space( const VerifyOptions& opt, Ledger& L )
{
  const int k = opt.k, n = opt.n;
  ClassifyOptions co{ opt.jobs, true };
  const auto imp = classify_space( k, n, { RelationKind::imp_signature }, co );
  const auto imp_by_count = classify_space( k, n, { RelationKind::imp }, co );
  const auto sub = classify_space( k, n, { RelationKind::sub }, co );
  const auto sep = classify_space( k, n, { RelationKind::sep }, co );
  const auto genus = classify_space( k, n, Relation::of_group( GroupName::GE ), co );
  const auto dummy = KFunction::constant( k, n, 0 );

  auto describe = []( const auto& w ) {
    return w ? format_table( w->first ) + " vs " + format_table( w->second ) : std::string{};
  };
  const auto w0 = refinement_witness( imp, imp_by_count );
  L.record( "imp-signature-fixes-imp-count", !w0, 0, w0 ? w0->first : dummy, describe( w0 ) );
  if ( k == 2 && n <= 3 )
  {
    // the two readings of implementation equivalence agree on small spaces
    const auto w = refinement_witness( imp_by_count, imp );
    L.record( "imp-readings-coincide", !w, 0, w ? w->first : dummy, describe( w ) );
  }
  const auto w1 = refinement_witness( imp, sep );
  L.record( "imp-refines-sep", !w1, 0, w1 ? w1->first : dummy, describe( w1 ) );
  const auto w2 = refinement_witness( sub, sep );
  L.record( "sub-refines-sep", !w2, 0, w2 ? w2->first : dummy, describe( w2 ) );
  for ( const auto* r : { &imp, &sub, &sep } )
  {
    // for k > 2 an output shift changes the range of unary functions, which
    // the sub relation compares literally
    if ( r == &sub && k > 2 )
      continue;
    const auto w = refinement_witness( genus, *r );
    L.record( "genus-refines-" + r->relation, !w, 0, w ? w->first : dummy, describe( w ) );
  }
  for ( const auto* r : { &imp, &imp_by_count, &sub, &sep, &genus } )
  {
    std::uint64_t total = 0;
    for ( const auto& c : r->classes )
      total += c.size;
    L.record( "class-sizes-sum", total == space_size( k, n ), 0, dummy, r->relation );
  }

  if ( k == 2 && n >= 3 )
  {
    // imp-equivalent, not sub-equivalent
    const auto a = parse_expression( "x1^0*x2*x3 + x1*x2^0*x3^0", 2, n );
    const auto b = parse_expression( "x2*x3 + x1*x2^0*x3 + x1*x2*x3^0", 2, n );
    const bool imp_not_sub = imp.class_of( a ) == imp.class_of( b ) && sub.class_of( a ) != sub.class_of( b ) &&
                             imp_count( a ) == 36 && imp_count( b ) == 36 && sub_vector( a )[1] == 6 &&
                             sub_vector( b )[1] == 3 && subfunctions( b ).size() == 12;
    L.record( "imp-does-not-refine-sub", imp_not_sub && !refinement_check( imp, sub ), 0, a );
    // sub-equivalent, not imp-equivalent
    const auto c = parse_expression( "x1*x2^0*x3^0 + x1", 2, n );
    const auto d = parse_expression( "x1*x2*x3", 2, n );
    const bool sub_not_imp = sub.class_of( c ) == sub.class_of( d ) && imp.class_of( c ) != imp.class_of( d ) &&
                             imp_count( c ) == 23 && imp_count( d ) == 21;
    L.record( "sub-does-not-refine-imp", sub_not_imp && !refinement_check( sub, imp ), 0, c );
  }
}

} // namespace

VerifyReport run_verify( const VerifyOptions& opt )
{
  if ( opt.k < 2 || opt.n < 0 )
    throw std::invalid_argument( "verify needs k >= 2 and n >= 0" );
  const auto space = space_size( opt.k, opt.n );
  const bool exhaustive = opt.samples == 0;
  if ( exhaustive && space > ( std::uint64_t{ 1 } << 20 ) )
    throw budget_exceeded( "exhaustive verification is limited to 2^20 functions; use --samples" );
  const auto count = exhaustive ? space : opt.samples;
  const unsigned jobs = std::max( 1u, opt.jobs );

  auto table_for = [&]( std::uint64_t i ) {
    if ( exhaustive )
      return from_numeral( opt.k, opt.n, i );
    std::mt19937_64 rng( opt.seed ^ ( i * 0xbf58476d1ce4e5b9ull ) );
    std::uniform_int_distribution<int> digit( 0, opt.k - 1 );
    std::vector<Value> v( checked_power( opt.k, opt.n, cell_limit() ) );
    for ( auto& x : v )
      x = static_cast<Value>( digit( rng ) );
    return KFunction( opt.k, opt.n, std::move( v ) );
  };

  std::vector<Ledger> ledgers( jobs );
  {
    std::vector<std::jthread> pool;
    for ( unsigned w = 0; w < jobs; ++w )
      pool.emplace_back( [&, w] {
        for ( std::uint64_t i = w; i < count; i += jobs )
          check_function( table_for( i ), i, opt, ledgers[w] );
      } );
  }
  Ledger all;
  for ( const auto& l : ledgers )
    all.merge( l );
  if ( space <= ( 1u << 16 ) && exhaustive )
    check_space( opt, all );
  return { all.results() };
}

} // namespace fnclass
