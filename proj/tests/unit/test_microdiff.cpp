#include <doctest.h>

#include <map>
#include <random>
#include <string>

#include "bk/errors.hpp"
#include "bk/microdiff.hpp"

using namespace bk;

namespace {

using WordSum = std::map<std::string, Rational>;

// Oracle: rewrite "ts" -> "st" + "ss" at a random position until every word
// has all s before all t.
WordSum rewrite(WordSum x, std::mt19937_64& rng) {
  for (;;) {
    auto it = std::find_if(x.begin(), x.end(), [](const auto& kv) { return kv.first.find("ts") != std::string::npos; });
    if (it == x.end()) return x;
    const std::string w = it->first;
    const Rational c = it->second;
    x.erase(it);
    std::vector<std::size_t> hits;
    for (std::size_t p = 0; p + 1 < w.size(); ++p)
      if (w[p] == 't' && w[p + 1] == 's') hits.push_back(p);
    const std::size_t p = hits[rng() % hits.size()];
    for (const char* rhs : {"st", "ss"}) {
      const std::string v = w.substr(0, p) + rhs + w.substr(p + 2);
      if ((x[v] += c) == 0) x.erase(v);
    }
  }
}

SkewElement from_words(const WordSum& x) {
  SkewElement out;
  for (const auto& [w, c] : x) {
    const auto j = static_cast<int>(std::count(w.begin(), w.end(), 's'));
    out += SkewElement::monomial(j, static_cast<int>(w.size()) - j, c);
  }
  return out;
}

std::string random_word(std::mt19937_64& rng, int len) {
  std::string w;
  for (int k = 0; k < len; ++k) w += (rng() % 2) ? 's' : 't';
  return w;
}

SkewElement random_element(std::mt19937_64& rng) {
  SkewElement x;
  for (int k = 0; k < 3; ++k)
    x += SkewElement::monomial(static_cast<int>(rng() % 3), static_cast<int>(rng() % 3), static_cast<int>(rng() % 7) - 3);
  return x;
}

}  // namespace

TEST_CASE("normal ordering agrees with the rewrite oracle in any order") {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 300; ++it) {
    const std::string w = random_word(rng, 1 + static_cast<int>(rng() % 8));
    std::vector<Letter> letters;
    for (char ch : w) letters.push_back({ch, 1});
    const SkewElement ordered = normal_order(letters);
    REQUIRE(from_words(rewrite({{w, 1}}, rng)) == ordered);
    REQUIRE(from_words(rewrite({{w, 1}}, rng)) == ordered);
  }
}

TEST_CASE("multiplication is associative and t acts on the left") {
  std::mt19937_64 rng(32);
  for (int it = 0; it < 200; ++it) {
    const auto a = random_element(rng), b = random_element(rng), c = random_element(rng);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(SkewElement::t_power(1) * a == a.left_multiply_t());
  }
}

TEST_CASE("commutator of t with powers of s") {
  for (int j = 1; j <= 20; ++j) {
    const auto sj = SkewElement::s_power(j);
    const auto t = SkewElement::t_power(1);
    CHECK(t * sj - sj * t == SkewElement::s_power(j + 1) * Rational(j));
  }
}

TEST_CASE("parsing words") {
  const auto w = parse_word("t^2 s t*s^3");
  REQUIRE(w.size() == 4u);
  CHECK(w[0].symbol == 't');
  CHECK(w[0].power == 2);
  CHECK(w[3].power == 3);
  CHECK(to_string(normal_order(parse_word("t s"))) == "s^2 + s*t");
  CHECK_THROWS_AS(parse_word("t x"), InputError);
  CHECK_THROWS_AS(parse_word("t^"), InputError);
}

TEST_CASE("s-degree cap") {
  CHECK_THROWS_AS(SkewElement::s_power(5, 4), CapExceeded);
  CHECK_THROWS_AS(normal_order(parse_word("t^3 s^3"), 5), CapExceeded);
  CHECK_NOTHROW(normal_order(parse_word("t^3 s^3"), 6));
}

TEST_CASE("pure s coefficient of t^(p+q-1) s^(p+q)") {
  for (int n = 2; n <= 8; ++n)
    for (int p = 1; p < n; ++p) {
      const auto c = st_expansion_certificate(p, n - p);
      CHECK(c.expected == factorial(static_cast<unsigned long>(n - 1)));
      CHECK(c.holds());
    }
}

TEST_CASE("s^(2p) in the span of s^j t^p s^(p-j)") {
  for (int p = 1; p <= 5; ++p) {
    const auto lambda = s_power_decomposition(p);
    REQUIRE(lambda.has_value());
    REQUIRE(lambda->size() == static_cast<std::size_t>(p + 1));
    SkewElement sum;
    for (int j = 0; j <= p; ++j)
      sum += SkewElement::s_power(j) * SkewElement::t_power(p) * SkewElement::s_power(p - j) * (*lambda)[static_cast<std::size_t>(j)];
    CHECK(sum == SkewElement::s_power(2 * p));
  }
}

TEST_CASE("repeated integration of 1") {
  const int cap = 50;
  TruncatedSeries u = TruncatedSeries::constant(1, cap);
  for (int k = 1; k <= cap; ++k) {
    const auto r = integrate_series(u);
    CHECK(r.dropped == 0);
    u = r.series;
    for (int j = 0; j <= cap; ++j)
      REQUIRE(u.coefficient(j) == (j == k ? Rational(1) / Rational(factorial(static_cast<unsigned long>(k))) : Rational(0)));
  }
  CHECK(integrate_series(u).dropped == 1);
}
