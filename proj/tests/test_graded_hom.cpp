#include <doctest.h>

#include <map>
#include <vector>

#include "oracles.hpp"
#include "random_values.hpp"
#include "test_util.hpp"

using namespace vss;
using vss::testing::elem;
using vss::testing::one;
using vss::testing::Rng;
using vss::testing::xi;

namespace {

SubalgebraBasis closure(Rank q, std::vector<GrassmannElement> gens) { return subalgebra_closure(q, gens); }

std::vector<Scalar> dense(const GrassmannElement& a) {
  std::vector<Scalar> row(std::size_t{1} << a.rank());
  for (const auto& [m, c] : a.terms()) row[m.bits()] = c;
  return row;
}

// Dimension of the span of all generator words, grown by length until it
// stops changing.
std::size_t word_span_dimension(Rank q, const std::vector<GrassmannElement>& gens,
                                std::vector<std::vector<Scalar>>* rows_out = nullptr) {
  std::vector<GrassmannElement> frontier{one(q)};
  std::vector<std::vector<Scalar>> rows{dense(one(q))};
  std::size_t dim = 1;
  for (;;) {
    std::vector<GrassmannElement> next;
    for (const auto& w : frontier)
      for (const auto& g : gens) next.push_back(oracle::mul(w, g));
    for (const auto& w : next) rows.push_back(dense(w));
    const std::size_t grown = oracle::dense_rank(rows);
    if (grown == dim) break;
    dim = grown;
    frontier = std::move(next);
  }
  if (rows_out) *rows_out = rows;
  return dim;
}

}  // namespace

TEST_CASE("make_hom") {
  const GradedHom f = make_hom(1, 2, {xi(2, 1) + xi(2, 2)});
  CHECK(f.source_rank() == 1);
  CHECK(f.target_rank() == 2);
  const GradedHom g = make_hom(2, 1, {xi(1, 1), xi(1, 1)});
  CHECK(g.images()[0] == g.images()[1]);
  CHECK_VSS_ERROR(make_hom(1, 1, {one(1) + xi(1, 1)}), ErrorKind::NotOdd);
  CHECK_VSS_ERROR(make_hom(1, 2, {elem(2, {{{1, 2}, 1}})}), ErrorKind::NotOdd);
  CHECK_VSS_ERROR(make_hom(2, 2, {xi(2, 1)}), ErrorKind::RankMismatch);
  CHECK_VSS_ERROR(make_hom(1, 2, {xi(3, 1)}), ErrorKind::RankMismatch);
  CHECK_NOTHROW(make_hom(1, 2, {GrassmannElement(2)}));
}

TEST_CASE("apply_hom") {
  const GradedHom f = make_hom(1, 2, {xi(2, 1) + xi(2, 2)});
  CHECK(apply_hom(f, GrassmannElement::constant(1, 3) + elem(1, {{{1}, 2}})) ==
        GrassmannElement::constant(2, 3) + elem(2, {{{1}, 2}, {{2}, 2}}));
  const GrassmannElement square = mul(xi(1, 1), xi(1, 1));
  CHECK(square.is_zero());
  CHECK(apply_hom(f, square).is_zero());
  CHECK(oracle::mul(f.images()[0], f.images()[0]).is_zero());

  const GradedHom g = make_hom(1, 4, {elem(4, {{{2, 3, 4}, 1}})});
  CHECK(apply_hom(g, xi(1, 1)) == elem(4, {{{2, 3, 4}, 1}}));
  CHECK_VSS_ERROR(apply_hom(g, xi(2, 1)), ErrorKind::RankMismatch);
}

TEST_CASE("apply_hom agrees with the substitution oracle") {
  Rng rng(21);
  for (int k = 0; k < 300; ++k) {
    const Rank p = static_cast<Rank>(rng.uniform(0, 5));
    const Rank q = static_cast<Rank>(rng.uniform(0, 5));
    const GradedHom f = testing::random_hom(rng, p, q);
    const GrassmannElement a = testing::random_element(rng, p, 5);
    CHECK(apply_hom(f, a) == oracle::substitute(f.images(), q, a));
    const GrassmannElement h = testing::random_homogeneous(rng, p, rng.coin());
    const GrassmannElement image = apply_hom(f, h);
    if (!image.is_zero() && !h.is_zero()) CHECK(parity(image) == parity(h));
  }
}

TEST_CASE("compose_hom") {
  const GradedHom f = make_hom(1, 2, {xi(2, 1) + xi(2, 2)});
  const GradedHom g = make_hom(2, 1, {xi(1, 1), xi(1, 1)});
  const GradedHom gf = compose_hom(g, f);
  const GrassmannElement expected = elem(1, {{{1}, 2}});
  CHECK(oracle::substitute(g.images(), 1, f.images()[0]) == expected);
  CHECK(gf == make_hom(1, 1, {expected}));
  CHECK(compose_hom(identity_hom(2), f) == f);
  CHECK(compose_hom(f, identity_hom(1)) == f);
  CHECK(compose_hom(augmentation_hom(2), f) == augmentation_hom(1));
  for (const auto& b : monomial_basis(1))
    CHECK(apply_hom(compose_hom(augmentation_hom(2), f), b) == apply_hom(augmentation_hom(1), b));
  CHECK_VSS_ERROR(compose_hom(f, f), ErrorKind::RankMismatch);
}

TEST_CASE("composition is associative and matches sequential application") {
  Rng rng(22);
  for (int k = 0; k < 200; ++k) {
    const Rank r0 = static_cast<Rank>(rng.uniform(0, 4));
    const Rank r1 = static_cast<Rank>(rng.uniform(0, 4));
    const Rank r2 = static_cast<Rank>(rng.uniform(0, 4));
    const Rank r3 = static_cast<Rank>(rng.uniform(0, 4));
    const GradedHom f = testing::random_hom(rng, r0, r1);
    const GradedHom g = testing::random_hom(rng, r1, r2);
    const GradedHom h = testing::random_hom(rng, r2, r3);
    CHECK(compose_hom(h, compose_hom(g, f)) == compose_hom(compose_hom(h, g), f));
    const GrassmannElement a = testing::random_element(rng, r0);
    CHECK(apply_hom(compose_hom(g, f), a) ==
          oracle::substitute(g.images(), r2, oracle::substitute(f.images(), r1, a)));
    const GradedHom killed = compose_hom(augmentation_hom(r1), f);
    CHECK(apply_hom(killed, a) == GrassmannElement::constant(0, body(a)));
  }
}

TEST_CASE("augmentation and unit section") {
  CHECK(apply_hom(augmentation_hom(2), GrassmannElement::constant(2, 3) + elem(2, {{{1, 2}, 1}})) ==
        GrassmannElement::constant(0, 3));
  CHECK(augmentation_hom(0) == identity_hom(0));
  CHECK(compose_hom(augmentation_hom(3), unit_section_hom(3)) == identity_hom(0));
  CHECK(apply_hom(unit_section_hom(3), GrassmannElement::constant(0, 7)) == GrassmannElement::constant(3, 7));
}

TEST_CASE("to_string of a hom") {
  const GradedHom f = make_hom(2, 2, {xi(2, 1) + xi(2, 2), GrassmannElement(2)});
  CHECK(to_string(f) == "xi1=xi1 + xi2; xi2=0");
}

TEST_CASE("subalgebra_closure examples") {
  const SubalgebraBasis a = closure(3, {elem(3, {{{1, 2, 3}, 1}})});
  CHECK(oracle::mul(elem(3, {{{1, 2, 3}, 1}}), elem(3, {{{1, 2, 3}, 1}})).is_zero());
  CHECK(a.dimension() == 2);
  CHECK(a.even() == std::vector{one(3)});
  CHECK(a.odd() == std::vector{elem(3, {{{1, 2, 3}, 1}})});

  const SubalgebraBasis full = closure(2, {xi(2, 1), xi(2, 2)});
  CHECK(full.dimension() == 4);
  for (const auto& b : monomial_basis(2)) CHECK(full.contains(b));

  const SubalgebraBasis even_only = closure(2, {elem(2, {{{1, 2}, 1}})});
  CHECK(even_only.dimension() == 2);
  CHECK(even_only.odd().empty());
  CHECK(even_only.even() == std::vector{one(2), elem(2, {{{1, 2}, 1}})});

  CHECK(closure(4, {}).dimension() == 1);
  CHECK_VSS_ERROR(closure(2, {one(2) + xi(2, 1)}), ErrorKind::NotHomogeneous);
  CHECK_VSS_ERROR(closure(2, {xi(3, 1)}), ErrorKind::RankMismatch);
}

TEST_CASE("closure matches the word-span oracle") {
  Rng rng(23);
  for (int k = 0; k < 120; ++k) {
    const Rank q = static_cast<Rank>(rng.uniform(1, 5));
    const auto gens = rng.coin() ? testing::random_generators_with_odd(rng, q) : testing::random_even_generators(rng, q);
    const SubalgebraBasis A = subalgebra_closure(q, gens);
    std::vector<std::vector<Scalar>> rows;
    const std::size_t dim = word_span_dimension(q, gens, &rows);
    CHECK(A.dimension() == dim);
    for (const auto& g : gens) CHECK(A.contains(g));
    for (const auto& v : A.all()) {
      CHECK(is_homogeneous(v));
      auto extended = rows;
      extended.push_back(dense(v));
      CHECK(oracle::dense_rank(extended) == dim);
    }
    const auto basis = A.all();
    for (const auto& x : basis)
      for (const auto& y : basis) CHECK(A.contains(oracle::mul(x, y)));
    for (const auto& v : A.odd()) CHECK(parity(v) == Parity::Odd);
    for (const auto& v : A.even()) CHECK(parity(v) == Parity::Even);
  }
}

TEST_CASE("closure is independent of generator order") {
  Rng rng(24);
  for (int k = 0; k < 60; ++k) {
    const Rank q = static_cast<Rank>(rng.uniform(1, 5));
    auto gens = testing::random_generators_with_odd(rng, q);
    const SubalgebraBasis a = subalgebra_closure(q, gens);
    std::reverse(gens.begin(), gens.end());
    const SubalgebraBasis b = subalgebra_closure(q, gens);
    CHECK(a.even() == b.even());
    CHECK(a.odd() == b.odd());
  }
}

TEST_CASE("lemma1_epi examples") {
  const OddLineHom h = lemma1_epi(closure(2, {xi(2, 1), xi(2, 2)}));
  CHECK(h.order() == 1);
  CHECK(h.beta() == Monomial::generator(1));
  const GrassmannElement a = elem(2, {{{}, 2}, {{1}, 3}, {{2}, 5}, {{1, 2}, 7}});
  CHECK(h(a) == elem(1, {{{}, 2}, {{1}, 3}}));
  CHECK(h(elem(2, {{{1, 2}, 1}})).is_zero());
  CHECK(oracle::mul(h(xi(2, 1)), h(xi(2, 2))).is_zero());
  CHECK(verify_hom(h, monomial_basis(2)).empty());

  const SubalgebraBasis cube = closure(3, {elem(3, {{{1, 2, 3}, 1}})});
  const OddLineHom h3 = lemma1_epi(cube);
  CHECK(h3.order() == 3);
  CHECK(h3.beta() == Monomial::from_indices(std::vector<unsigned>{1, 2, 3}));
  CHECK(h3(GrassmannElement::constant(3, 4) + elem(3, {{{1, 2, 3}, -2}})) == elem(1, {{{}, 4}, {{1}, -2}}));
  const HomReport r = verify_hom(h3, cube.all());
  CHECK(r.empty());
  CHECK(r.surjective());

  CHECK_VSS_ERROR(lemma1_epi(closure(2, {elem(2, {{{1, 2}, 1}})})), ErrorKind::NoOddSector);
}

TEST_CASE("beta is the least monomial of least size among odd supports") {
  const SubalgebraBasis A = closure(4, {xi(4, 2) + elem(4, {{{1, 3, 4}, 1}}), xi(4, 3)});
  const OddLineHom h = lemma1_epi(A);
  CHECK(h.beta() == Monomial::generator(2));

  Rng rng(25);
  for (int k = 0; k < 100; ++k) {
    const Rank q = static_cast<Rank>(rng.uniform(1, 6));
    const SubalgebraBasis B = subalgebra_closure(q, testing::random_generators_with_odd(rng, q));
    const OddLineHom hb = lemma1_epi(B);
    unsigned smallest = 64;
    std::vector<std::vector<unsigned>> candidates;
    for (const auto& v : B.odd())
      for (const auto& [m, c] : v.terms()) {
        if (m.size() < smallest) {
          smallest = m.size();
          candidates.clear();
        }
        if (m.size() == smallest) candidates.push_back(m.indices());
      }
    CHECK(hb.order() == smallest);
    CHECK(hb.beta().indices() == *std::min_element(candidates.begin(), candidates.end()));
    const HomReport r = verify_hom(hb, B.all());
    CHECK(r.empty());
    CHECK(r.surjective());
  }
}

TEST_CASE("the odd-line map is not multiplicative on the whole algebra") {
  const std::vector<GrassmannElement> basis = monomial_basis(3);
  const HomReport cubic = verify_hom(OddLineHom(3, Monomial::from_indices(std::vector<unsigned>{1, 2, 3})), basis);
  CHECK_FALSE(cubic.empty());
  CHECK_FALSE(cubic.non_multiplicative.empty());
  // With a single generator the map is the substitution xi1 -> zeta.
  CHECK(verify_hom(OddLineHom(3, Monomial::generator(1)), basis).empty());
  CHECK(verify_hom(OddLineHom(4, Monomial::generator(2)), monomial_basis(4)).empty());
  CHECK_VSS_ERROR(OddLineHom(3, Monomial::from_indices(std::vector<unsigned>{1, 2})), ErrorKind::NotOdd);
}

TEST_CASE("verify_hom on substitution homs") {
  Rng rng(26);
  for (int k = 0; k < 60; ++k) {
    const Rank p = static_cast<Rank>(rng.uniform(0, 4));
    const Rank q = static_cast<Rank>(rng.uniform(0, 4));
    const GradedHom f = testing::random_hom(rng, p, q);
    const HomReport r = verify_hom(f, monomial_basis(p));
    CHECK(r.empty());
    CHECK(r.target_dimension == (std::size_t{1} << q));
  }
  CHECK(verify_hom(identity_hom(3), monomial_basis(3)).surjective());
}

TEST_CASE("verify_hom flags non-unital and grading-breaking maps") {
  const auto basis = monomial_basis(2);
  const HomReport zero = verify_hom([](const GrassmannElement&) { return GrassmannElement(1); }, 1, basis);
  CHECK_FALSE(zero.unital);
  const HomReport swap = verify_hom(
      [](const GrassmannElement& a) {
        GrassmannElement out = GrassmannElement::constant(1, body(a));
        out += GrassmannElement::constant(1, a.coefficient(Monomial::generator(1)));
        return out;
      },
      1, basis);
  CHECK_FALSE(swap.grading_violations.empty());
}

TEST_CASE("j_family") {
  const SubalgebraBasis line = closure(1, {xi(1, 1)});
  const OddLineHom h = lemma1_epi(line);
  const JLambdaMap j5 = j_family(h, line, 5);
  CHECK(j5(GrassmannElement::constant(1, 2) + elem(1, {{{1}, 3}})) == elem(1, {{{}, 2}, {{1}, 15}}));
  CHECK(verify_hom([&](const GrassmannElement& a) { return j5(a); }, 1, line.all()).empty());
  for (const auto& x : line.all())
    for (const auto& y : line.all()) CHECK(j5(oracle::mul(x, y)) == oracle::mul(j5(x), j5(y)));

  const JLambdaMap j0 = j_family(h, line, 0);
  for (const auto& b : monomial_basis(1))
    CHECK(j0(b) == apply_hom(compose_hom(unit_section_hom(1), augmentation_hom(1)), b));

  const SubalgebraBasis A = closure(3, {xi(3, 1) + elem(3, {{{1, 2, 3}, 1}}), elem(3, {{{2, 3}, 1}})});
  const OddLineHom hA = lemma1_epi(A);
  for (const auto& z : A.all()) {
    const GrassmannElement a = j_family(hA, A, -1)(z);
    const GrassmannElement b = j_family(hA, A, Scalar(1, 3))(z);
    const GrassmannElement c = j_family(hA, A, Scalar(5, 3))(z);
    CHECK(a - Scalar(2) * b + c == GrassmannElement(1));
  }
  CHECK_VSS_ERROR(j_family(hA, line, 1), ErrorKind::RankMismatch);
}

TEST_CASE("j_lambda maps are distinct verified homomorphisms") {
  const SubalgebraBasis A = closure(4, {xi(4, 1) + xi(4, 2), elem(4, {{{1, 3}, 1}, {{2, 4}, -1}})});
  const OddLineHom h = lemma1_epi(A);
  const BasisProducts products(A.all());
  std::vector<GrassmannElement> odd_images;
  for (int n = -10; n <= 10; ++n) {
    const JLambdaMap j = j_family(h, A, Scalar(n, 3));
    const HomReport r = verify_hom([&](const GrassmannElement& a) { return j(a); }, 1, products);
    CHECK(r.empty());
    odd_images.push_back(j(A.odd().front()));
  }
  for (std::size_t i = 0; i < odd_images.size(); ++i)
    for (std::size_t k = i + 1; k < odd_images.size(); ++k) CHECK(odd_images[i] != odd_images[k]);
}

TEST_CASE("monomial_basis") {
  CHECK(monomial_basis(0) == std::vector{one(0)});
  const auto b3 = monomial_basis(3);
  CHECK(b3.size() == 8);
  CHECK(b3[1] == xi(3, 1));
  CHECK(b3.back() == elem(3, {{{1, 2, 3}, 1}}));
  CHECK_VSS_ERROR(monomial_basis(21), ErrorKind::BudgetExceeded);
}
