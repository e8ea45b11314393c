#include <doctest.h>

#include <random>
#include <sstream>

#include "bgaps/admissible/admissibility.hpp"
#include "bgaps/admissible/gap_encoding.hpp"
#include "bgaps/admissible/hsmall.hpp"
#include "bgaps/admissible/primes.hpp"
#include "bgaps/admissible/sieves.hpp"
#include "bgaps/admissible/tuple_io.hpp"

using namespace bgaps::admissible;

namespace {

Tuple random_tuple(std::mt19937_64& rng, std::size_t k, std::int64_t span) {
  std::uniform_int_distribution<std::int64_t> d(0, span);
  std::vector<std::int64_t> v;
  while (v.size() < k) {
    v.push_back(d(rng));
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  return Tuple(v);
}

}  // namespace

TEST_CASE("small tuples") {
  CHECK(is_admissible(Tuple({0, 2, 6})));
  CHECK_FALSE(is_admissible(Tuple({0, 2, 4})));
  CHECK(is_admissible(Tuple({0})));
  CHECK(is_admissible_naive(Tuple({0, 2, 6})));
  CHECK_FALSE(is_admissible_naive(Tuple({0, 1, 2})));
  CHECK(first_obstruction(Tuple({0, 2, 4})) == 3u);
  CHECK_THROWS(Tuple({0, 0}));
}

TEST_CASE("published tuples") {
  for (auto [file, k, d] : {std::tuple{"tuple_k50.txt", 50, 246}, {"tuple_k51.txt", 51, 252}, {"tuple_k54.txt", 54, 270}}) {
    auto t = load_tuple(std::string(BGAPS_DATA_DIR) + "/" + file);
    CHECK(t.size() == static_cast<std::size_t>(k));
    CHECK(t.diameter() == d);
    CHECK(is_admissible(t));
    CHECK(is_admissible_naive(t));
  }
}

TEST_CASE("fast tester agrees with the naive oracle") {
  std::mt19937_64 rng(20240517);
  int admissible_seen = 0;
  for (int i = 0; i < 10000; ++i) {
    std::size_t k = 2 + rng() % 199;
    auto t = random_tuple(rng, k, static_cast<std::int64_t>(k * (3 + rng() % 12)));
    bool fast = is_admissible(t);
    REQUIRE(fast == is_admissible_naive(t));
    admissible_seen += fast;
    auto shifted = t.shifted(static_cast<std::int64_t>(rng() % 2000001) - 1000000);
    REQUIRE(is_admissible(shifted) == fast);
  }
  CHECK(admissible_seen > 0);
  // Dense random 20-tuples.
  for (int i = 0; i < 1000; ++i) {
    auto t = random_tuple(rng, 20, 120);
    REQUIRE(is_admissible(t) == is_admissible_naive(t));
  }
}

TEST_CASE("window length") {
  CHECK(AdmissibilityTester::window_length(2, 5511) == 0);
  std::uint64_t m = AdmissibilityTester::window_length(5507, 5511);
  CHECK(m == 26);  // ceil(3 ln 5511)
  CHECK(AdmissibilityTester::window_length(5, 5) == 4);  // min(p - 1, ceil(3 ln 5))
}

TEST_CASE("primes") {
  CHECK(primes_up_to(20) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19});
  CHECK(prime_pi(5511) == 728);
  CHECK(first_primes(4).back() == 7);
}

TEST_CASE("gap encoding round trip") {
  auto g = encode_gaps(Tuple({0, 2, 6}));
  CHECK(g.first == 0);
  CHECK(g.gaps == std::vector<std::uint64_t>{2, 4});
  CHECK(encode_gaps(Tuple({5})).gaps.empty());
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    auto t = random_tuple(rng, 1 + rng() % 60, 5000).shifted(-2500);
    auto e = encode_gaps(t);
    CHECK(decode_gaps(e) == t);
    CHECK(from_bytes(to_bytes(e)) == e);
  }
  auto bytes = to_bytes(encode_gaps(Tuple({0, 1000})));
  bytes.pop_back();
  CHECK_THROWS_AS(from_bytes(bytes), std::invalid_argument);
}

TEST_CASE("tuple files") {
  std::istringstream in("# comment\nk=3\n0\n2\n6\n");
  CHECK(read_tuple(in) == Tuple({0, 2, 6}));
  std::istringstream bad("k=4\n0\n2\n6\n");
  CHECK_THROWS(read_tuple(bad));
  std::stringstream round;
  write_tuple(round, Tuple({-3, 1, 5}));
  CHECK(read_tuple(round) == Tuple({-3, 1, 5}));
}

TEST_CASE("exhaustive small H") {
  CHECK(h_exact_small(3, 10) == 6);
  CHECK(h_exact_small(2, 4) == 2);
  CHECK(h_exact_small(4, 10) == 8);
  CHECK(h_exact_small(5, 20) == 12);
  CHECK(h_exact_small(6, 20) == 16);
  CHECK_THROWS_AS(h_exact_small(3, 5), std::runtime_error);
}

TEST_CASE("deterministic sieves") {
  auto t2 = sieve_k_primes_past_k(2);
  CHECK(t2 == Tuple({3, 5}));
  CHECK(sieve_hensley_richards(2).diameter() == 2);
  auto e3 = sieve_eratosthenes(3);
  CHECK(e3.size() == 3);
  CHECK(e3.diameter() <= 8);
  CHECK(is_admissible(e3));

  CHECK(sieve_k_primes_past_k(5511).diameter() == 56538);
  auto er = sieve_eratosthenes(5511);
  auto hr = sieve_hensley_richards(5511);
  CHECK(er.diameter() == 55160);
  CHECK(hr.diameter() == 54480);
  CHECK(is_admissible(er));
  CHECK(is_admissible(hr));
  CHECK(56538 >= er.diameter());
  CHECK(er.diameter() >= hr.diameter());
}

TEST_CASE("shifted sieves") {
  SieveConfig cfg;
  cfg.method = SieveMethod::shifted_schinzel;
  cfg.shift = 5511;
  auto s = sieve_shifted_schinzel(5511, cfg);
  CHECK(s.tuple.size() == 5511);
  CHECK(is_admissible(s.tuple));
  CHECK(s.tuple.diameter() == 54524);
  REQUIRE(s.record.has_value());
  CHECK(realize(*s.record) == s.tuple);
  std::stringstream rec;
  write_sieve_record(rec, *s.record);
  CHECK(read_sieve_record(rec) == *s.record);

  SieveConfig small;
  small.method = SieveMethod::shifted_schinzel;
  CHECK(sieve_shifted_schinzel(2, small).tuple.diameter() == 2);

  SieveConfig greedy;
  greedy.method = SieveMethod::shifted_greedy;
  for (std::size_t k : {50u, 54u, 100u}) {
    auto g = sieve_shifted_greedy(k, greedy);
    CHECK(g.tuple.size() == k);
    CHECK(is_admissible(g.tuple));
    if (k == 50) CHECK(g.tuple.diameter() >= 246);
    if (k <= 6) CHECK(g.tuple.diameter() >= h_exact_small(k, 64));
  }
  for (std::size_t k = 2; k <= 6; ++k) {
    auto g = sieve_shifted_greedy(k, greedy);
    CHECK(g.tuple.diameter() >= h_exact_small(k, 64));
  }

  SieveConfig threads = greedy;
  threads.threads = 2;
  threads.batch = 2;
  auto a = sieve_shifted_greedy(300, threads);
  threads.threads = 1;
  auto b = sieve_shifted_greedy(300, threads);
  CHECK(a.tuple == b.tuple);

  SieveConfig bad = greedy;
  bad.threads = 2;
  bad.batch = 3;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
