#include "vss/text.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>

namespace vss {

namespace {

[[noreturn]] void parse_error(const std::string& what, std::size_t position) {
  throw Error(ErrorKind::ParseError, what + " at position " + std::to_string(position), position);
}

[[noreturn]] void index_error(const std::string& what, std::size_t position) {
  throw Error(ErrorKind::IndexOutOfRange, what + " at position " + std::to_string(position), position);
}

bool is_odd_token(Token t) {
  return t == Token::Xi || t == Token::Th || t == Token::Dx || t == Token::Zeta;
}

std::string token_name(const Factor& f) {
  switch (f.token) {
    case Token::Xi: return "xi" + std::to_string(f.index);
    case Token::X: return "x" + std::to_string(f.index);
    case Token::Th: return "th" + std::to_string(f.index);
    case Token::Dx: return "dx" + std::to_string(f.index);
    case Token::Dxi: return "dxi" + std::to_string(f.index);
    case Token::Zeta: return "zeta";
  }
  return "?";
}

class Parser {
 public:
  Parser(std::string_view text, std::size_t offset) : text_(text), offset_(offset) {}

  ParseTree expression() {
    ParseTree tree;
    skip_ws();
    if (at_end()) parse_error("empty expression", where());
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    tree.terms.push_back(term(negative));
    while (true) {
      skip_ws();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') parse_error(std::string("unexpected '") + c + "'", where());
      ++pos_;
      tree.terms.push_back(term(c == '-'));
    }
    return tree;
  }

  // A single factor with nothing after it (assignment targets).
  Factor lone_factor() {
    skip_ws();
    Factor f = factor();
    skip_ws();
    if (!at_end()) parse_error("expected '=' after assignment target", where());
    return f;
  }

 private:
  ParsedTerm term(bool negative) {
    ParsedTerm t{Scalar(1), {}};
    skip_ws();
    if (at_end()) parse_error("expected a term", where());
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coeff = rational();
      skip_ws();
      if (at_end() || peek() != '*') {
        if (negative) t.coeff = -t.coeff;
        return t;
      }
      ++pos_;
    }
    t.factors.push_back(factor());
    while (true) {
      skip_ws();
      if (at_end() || peek() != '*') break;
      ++pos_;
      t.factors.push_back(factor());
    }
    if (negative) t.coeff = -t.coeff;
    return t;
  }

  Scalar rational() {
    const std::size_t start = pos_;
    const std::string num = digits();
    skip_ws();
    std::string den = "1";
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
        parse_error("expected a denominator", where());
      den = digits();
      if (std::all_of(den.begin(), den.end(), [](char c) { return c == '0'; }))
        parse_error("zero denominator", offset_ + start);
    }
    return Scalar::parse(num + "/" + den);
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  unsigned natural(const char* what) {
    skip_ws();
    const std::size_t start = where();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
      parse_error(std::string("expected ") + what, start);
    const std::string d = digits();
    if (d.size() > 9) parse_error(std::string(what) + " too large", start);
    return static_cast<unsigned>(std::stoul(d));
  }

  Factor factor() {
    skip_ws();
    const std::size_t start = where();
    std::string word;
    while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) word += text_[pos_++];
    if (word.empty()) {
      if (at_end()) parse_error("expected a generator", start);
      parse_error(std::string("unexpected '") + peek() + "'", start);
    }
    Factor f{Token::Xi, 1, 1, start};
    if (word == "zeta") {
      f.token = Token::Zeta;
    } else {
      if (word == "xi") f.token = Token::Xi;
      else if (word == "x") f.token = Token::X;
      else if (word == "th") f.token = Token::Th;
      else if (word == "dx") f.token = Token::Dx;
      else if (word == "dxi") f.token = Token::Dxi;
      else parse_error("unknown generator '" + word + "'", start);
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
        parse_error("generator '" + word + "' needs an index", where());
      f.index = natural("index");
      if (f.index == 0) index_error("generator index 0 does not exist", start);
    }
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      f.power = natural("exponent");
      if (is_odd_token(f.token) && f.power > 1)
        parse_error("odd generator " + token_name(f) + " cannot be raised to a power above 1", start);
    }
    return f;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  std::size_t where() const { return offset_ + pos_; }

  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

struct Segment {
  std::string_view text;
  std::size_t offset;
};

std::vector<Segment> split(std::string_view text, char separator) {
  std::vector<Segment> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(separator, start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view piece = text.substr(start, end - start);
    if (piece.find_first_not_of(" \t\r\n") != std::string_view::npos) out.push_back({piece, start});
    start = end + 1;
  }
  return out;
}

void require_tokens(const ParseTree& tree, std::initializer_list<Token> allowed, const char* kind) {
  for (const ParsedTerm& t : tree.terms)
    for (const Factor& f : t.factors)
      if (std::find(allowed.begin(), allowed.end(), f.token) == allowed.end())
        parse_error("generator " + token_name(f) + " is not allowed in " + kind, f.position);
}

GrassmannElement build_element(const ParseTree& tree, Rank rank) {
  require_tokens(tree, {Token::Xi, Token::Zeta}, "a Grassmann element");
  std::vector<RawTerm> raw;
  for (const ParsedTerm& t : tree.terms) {
    RawTerm r{{}, t.coeff};
    for (const Factor& f : t.factors) {
      if (f.index > rank)
        index_error("generator " + token_name(f) + " does not exist in rank " + std::to_string(rank),
                    f.position);
      if (f.power == 1) r.indices.push_back(f.index);
    }
    raw.push_back(std::move(r));
  }
  return normalize(static_cast<long>(rank), raw);
}

}  // namespace

unsigned ParseTree::max_xi_index() const {
  unsigned best = 0;
  for (const ParsedTerm& t : terms)
    for (const Factor& f : t.factors)
      if (f.token == Token::Xi || f.token == Token::Zeta) best = std::max(best, f.index);
  return best;
}

ParseTree parse_expression(std::string_view text) { return Parser(text, 0).expression(); }

std::vector<Assignment> parse_assignments(std::string_view text) {
  std::vector<Assignment> out;
  for (const Segment& seg : split(text, ';')) {
    const std::size_t eq = seg.text.find('=');
    if (eq == std::string_view::npos) parse_error("expected 'name=value'", seg.offset);
    Assignment a{Parser(seg.text.substr(0, eq), seg.offset).lone_factor(),
                 Parser(seg.text.substr(eq + 1), seg.offset + eq + 1).expression()};
    if (a.target.power != 1) parse_error("assignment target cannot carry a power", a.target.position);
    for (const Assignment& prev : out)
      if (prev.target.token == a.target.token && prev.target.index == a.target.index)
        parse_error("generator " + token_name(a.target) + " assigned twice", a.target.position);
    out.push_back(std::move(a));
  }
  return out;
}

GrassmannElement parse_element(std::string_view text, Rank rank) {
  return build_element(parse_expression(text), rank);
}

std::vector<GrassmannElement> parse_element_list(std::string_view text, Rank rank) {
  std::vector<GrassmannElement> out;
  for (const Segment& seg : split(text, ';'))
    out.push_back(build_element(Parser(seg.text, seg.offset).expression(), rank));
  return out;
}

SuperFunction parse_superfunction(std::string_view text, SuperDomainSpec domain) {
  const ParseTree tree = parse_expression(text);
  require_tokens(tree, {Token::X, Token::Th}, "a superfunction");
  SuperFunction out(domain);
  for (const ParsedTerm& t : tree.terms) {
    SuperFunction product = SuperFunction::constant(domain, t.coeff);
    for (const Factor& f : t.factors) {
      const unsigned bound = f.token == Token::X ? domain.even_dim : domain.odd_dim;
      if (f.index > bound) index_error("coordinate " + token_name(f) + " does not exist", f.position);
      const SuperFunction g = f.token == Token::X ? SuperFunction::even_coordinate(domain, f.index)
                                                  : SuperFunction::odd_coordinate(domain, f.index);
      for (unsigned k = 0; k < f.power; ++k) product = product * g;
    }
    out += product;
  }
  return out;
}

SuperForm parse_form(std::string_view text, SuperDomainSpec domain) {
  const ParseTree tree = parse_expression(text);
  require_tokens(tree, {Token::X, Token::Xi, Token::Dx, Token::Dxi}, "a differential form");
  SuperForm out(domain);
  for (const ParsedTerm& t : tree.terms) {
    SuperForm product = SuperForm::constant(domain, t.coeff);
    for (const Factor& f : t.factors) {
      const bool even_block = f.token == Token::X || f.token == Token::Dx;
      if (f.index > (even_block ? domain.even_dim : domain.odd_dim))
        index_error("generator " + token_name(f) + " does not exist", f.position);
      SuperForm g;
      switch (f.token) {
        case Token::X: g = SuperForm::x(domain, f.index); break;
        case Token::Xi: g = SuperForm::xi(domain, f.index); break;
        case Token::Dx: g = SuperForm::dx(domain, f.index); break;
        default: g = SuperForm::dxi(domain, f.index); break;
      }
      for (unsigned k = 0; k < f.power; ++k) product = wedge(product, g);
    }
    out += product;
  }
  return out;
}

namespace {

std::vector<GrassmannElement> assigned_images(const std::vector<Assignment>& assignments,
                                              Rank count, Rank target_rank) {
  std::vector<GrassmannElement> images(count, GrassmannElement(target_rank));
  for (const Assignment& a : assignments) {
    if (a.target.token != Token::Xi)
      parse_error("assignment target must be a generator xiK", a.target.position);
    if (a.target.index > count)
      index_error("generator " + token_name(a.target) + " does not exist in rank " +
                      std::to_string(count),
                  a.target.position);
    images[a.target.index - 1] = build_element(a.value, target_rank);
  }
  return images;
}

}  // namespace

GradedHom parse_hom(std::string_view text, Rank source_rank, Rank target_rank) {
  return make_hom(source_rank, target_rank,
                  assigned_images(parse_assignments(text), source_rank, target_rank));
}

FiniteRangeEndo parse_endo(std::string_view text) {
  const std::vector<Assignment> assignments = parse_assignments(text);
  unsigned support = 0;
  unsigned range = 0;
  for (const Assignment& a : assignments) {
    support = std::max(support, a.target.index);
    range = std::max(range, a.value.max_xi_index());
  }
  if (support > kMaxRank || range > kMaxRank)
    fail(ErrorKind::IndexOutOfRange, "generator index exceeds the supported maximum");
  return make_endo(range, assigned_images(assignments, support, range));
}

namespace {

QPoint build_point(const std::vector<Assignment>& assignments, SuperDomainSpec domain, Rank q) {
  std::vector<GrassmannElement> evens(domain.even_dim, GrassmannElement(q));
  std::vector<GrassmannElement> odds(domain.odd_dim, GrassmannElement(q));
  for (const Assignment& a : assignments) {
    if (a.target.token != Token::X && a.target.token != Token::Th)
      parse_error("point coordinates are named xK or thK", a.target.position);
    auto& slots = a.target.token == Token::X ? evens : odds;
    if (a.target.index > slots.size())
      index_error("coordinate " + token_name(a.target) + " does not exist", a.target.position);
    slots[a.target.index - 1] = build_element(a.value, q);
  }
  return make_point(q, std::move(evens), std::move(odds));
}

}  // namespace

QPoint parse_point(std::string_view text, SuperDomainSpec domain, Rank q) {
  return build_point(parse_assignments(text), domain, q);
}

QPoint parse_point(std::string_view text, SuperDomainSpec domain) {
  const std::vector<Assignment> assignments = parse_assignments(text);
  unsigned q = 0;
  for (const Assignment& a : assignments) q = std::max(q, a.value.max_xi_index());
  if (q > kMaxRank) fail(ErrorKind::IndexOutOfRange, "generator index exceeds the supported maximum");
  return build_point(assignments, domain, q);
}

}  // namespace vss
