#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "affkl/group_element.hpp"
#include "affkl/type_a.hpp"

namespace affkl {

/// Random element pi^k s_{i1} ... s_{il} with l uniform in [0, max_word]
/// (the word need not be reduced).  With with_pi false the result is in W_a.
GroupElement random_element(const RootDatum& d, std::mt19937_64& rng, int max_word, bool with_pi = true);
GroupElement random_finite(const RootDatum& d, std::mt19937_64& rng);

/// Working instance of "large with respect to x": every <beta, alpha_i^vee>
/// is at least this.
int largeness_threshold(int length_x, int length_w0);
/// u y^beta v with beta dominant, each coordinate >= threshold + extra.
GroupElement large_element(const RootDatum& d, const GroupElement& u, const GroupElement& v, int threshold,
                           std::mt19937_64& rng);

struct LemmaResult {
  std::string name;
  int cases = 0;
  int vacuous = 0;
  int failures = 0;
  std::string counterexample;  // first failure, empty if none

  bool passed() const { return failures == 0; }
};

LemmaResult check_reduced_lemma(const RootDatum& d, std::mt19937_64& rng, int count, int max_word = 6);
LemmaResult check_long_z_helper_2(const RootDatum& d, std::mt19937_64& rng, int count);
LemmaResult check_long_z_helper_1(const RootDatum& d, std::mt19937_64& rng, int count, int max_word = 6);
LemmaResult check_long_z_lemma(const RootDatum& d, std::mt19937_64& rng, int count, int max_word = 6);
LemmaResult check_key_factorization(const RootDatum& d, std::mt19937_64& rng, int count, int max_word = 6);

/// One row of the SL_5 example tables.
struct GoldenRow {
  std::vector<int> x_inverse_word;
  Window element;  // z~^{-1} x^{-1} or z~^{-1} y^{-1} x^{-1}
  char element_cmp = ' ';
  Window psi;  // Psi(x^{-1}) or Psi(y^{-1} x^{-1})
  char psi_cmp = ' ';
  std::optional<Window> y_prime_inverse;
};
/// z~^{-1} = -27 -13 4 16 35, x^{-1} running over prefixes of s0 s4 s1 s0 s1.
std::vector<GoldenRow> helper_example_table();
/// Same z~, y^{-1} = 4 3 1 2 5, x^{-1} over prefixes of s0 s4 s1 s0 s2.
std::vector<GoldenRow> long_z_example_table();
/// Compares both tables with the recorded values.
LemmaResult check_golden_tables();

struct LemmaConfig {
  std::uint64_t seed = 1;
  int count = 100;
  int max_word = 6;
};
std::vector<LemmaResult> run_lemma_suite(const RootDatum& d, const LemmaConfig& cfg);

}  // namespace affkl
