#include "fnclass/sp_expr.hpp"

#include <algorithm>
#include <cctype>

namespace fnclass
{

ParseError::ParseError( std::size_t position, const std::string& message )
    : std::invalid_argument( "at position " + std::to_string( position ) + ": " + message ), position_( position )
{
}

int SPExpression::max_var() const
{
  int m = 0;
  for ( const auto& t : terms )
    for ( const auto& f : t.factors )
      m = std::max( m, f.var );
  return m;
}

namespace
{

constexpr std::string_view oplus = "\xe2\x8a\x95"; // U+2295

class Parser
{
public:
  Parser( std::string_view text, int k ) : text_( text ), k_( k ) {}

  SPExpression run()
  {
    if ( k_ < 2 || k_ > 255 )
      throw std::invalid_argument( "k must be in 2..255" );
    SPExpression e;
    e.terms.push_back( term() );
    while ( true )
    {
      skip_space();
      if ( at_end() )
        break;
      if ( peek() == '+' )
        ++pos_;
      else if ( text_.substr( pos_, oplus.size() ) == oplus )
        pos_ += oplus.size();
      else
        throw ParseError( pos_, std::string( "unexpected '" ) + peek() + "'" );
      e.terms.push_back( term() );
    }
    return e;
  }

private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space()
  {
    while ( !at_end() && std::isspace( static_cast<unsigned char>( peek() ) ) )
      ++pos_;
  }

  unsigned number( const char* what )
  {
    skip_space();
    const auto start = pos_;
    unsigned v = 0;
    while ( !at_end() && std::isdigit( static_cast<unsigned char>( peek() ) ) )
    {
      v = v * 10 + static_cast<unsigned>( peek() - '0' );
      if ( v > 1000000 )
        throw ParseError( start, std::string( what ) + " is too large" );
      ++pos_;
    }
    if ( pos_ == start )
      throw ParseError( start, std::string( "expected " ) + what );
    return v;
  }

  bool factor_starts() const
  {
    const char c = peek();
    return c == 'x' || c == 'X' || std::isdigit( static_cast<unsigned char>( c ) );
  }

  void factor( SPTerm& t )
  {
    skip_space();
    const auto start = pos_;
    if ( peek() == 'x' || peek() == 'X' )
    {
      ++pos_;
      const auto var = number( "variable index" );
      if ( var < 1 || var > 31 )
        throw ParseError( start, "variable index must be in 1..31" );
      SPFactor f{ static_cast<int>( var ), std::nullopt };
      skip_space();
      if ( peek() == '^' )
      {
        ++pos_;
        const auto exp_pos = pos_;
        const auto a = number( "exponent" );
        if ( a >= static_cast<unsigned>( k_ ) )
          throw ParseError( exp_pos, "exponent " + std::to_string( a ) + " is not in Z_" + std::to_string( k_ ) );
        f.exponent = static_cast<Value>( a );
      }
      t.factors.push_back( f );
      return;
    }
    if ( std::isdigit( static_cast<unsigned char>( peek() ) ) )
    {
      const auto c = number( "constant" );
      if ( c >= static_cast<unsigned>( k_ ) )
        throw ParseError( start, "constant " + std::to_string( c ) + " is not in Z_" + std::to_string( k_ ) );
      t.coefficient = static_cast<Value>( ( t.coefficient * c ) % k_ );
      return;
    }
    if ( at_end() )
      throw ParseError( pos_, "unexpected end of input" );
    throw ParseError( pos_, std::string( "unexpected '" ) + peek() + "'" );
  }

  SPTerm term()
  {
    SPTerm t;
    factor( t );
    while ( true )
    {
      skip_space();
      if ( peek() == '*' )
      {
        ++pos_;
        factor( t );
      }
      else if ( factor_starts() )
        factor( t ); // juxtaposition, as in x1x2
      else
        return t;
    }
  }

  std::string_view text_;
  int k_;
  std::size_t pos_ = 0;
};

} // namespace

SPExpression parse_sp( std::string_view text, int k )
{
  return Parser( text, k ).run();
}

KFunction evaluate_sp( const SPExpression& e, int k, std::optional<int> n )
{
  const int arity = n.value_or( e.max_var() );
  if ( arity < e.max_var() )
    throw std::invalid_argument( "arity " + std::to_string( arity ) + " is below the largest variable index x" +
                                 std::to_string( e.max_var() ) );
  const auto cells = checked_power( k, arity, cell_limit() );
  std::vector<Value> values( cells, 0 );
  std::vector<Value> point( arity, 0 );
  for ( std::uint64_t idx = 0; idx < cells; ++idx )
  {
    unsigned sum = 0;
    for ( const auto& t : e.terms )
    {
      unsigned prod = t.coefficient;
      for ( const auto& f : t.factors )
      {
        if ( prod == 0 )
          break;
        const Value x = point[f.var - 1];
        prod = f.exponent ? ( x == *f.exponent ? prod : 0u ) : ( prod * x ) % k;
      }
      sum = ( sum + prod ) % k;
    }
    values[idx] = static_cast<Value>( sum );
    for ( int i = 0; i < arity; ++i )
    {
      if ( ++point[i] < k )
        break;
      point[i] = 0;
    }
  }
  return KFunction( k, arity, std::move( values ) );
}

KFunction parse_expression( std::string_view text, int k, std::optional<int> n )
{
  return evaluate_sp( parse_sp( text, k ), k, n );
}

std::string to_sp( const KFunction& f )
{
  std::string out;
  for ( std::size_t idx = 0; idx < f.size(); ++idx )
  {
    const Value a = f[idx];
    if ( a == 0 )
      continue;
    if ( !out.empty() )
      out += " + ";
    std::string term;
    if ( a != 1 || f.n() == 0 )
      term = std::to_string( a );
    const auto point = f.point_of( idx );
    for ( int i = 0; i < f.n(); ++i )
    {
      if ( !term.empty() )
        term += '*';
      term += "x" + std::to_string( i + 1 ) + "^" + std::to_string( point[i] );
    }
    out += term;
  }
  return out.empty() ? "0" : out;
}

} // namespace fnclass
