#pragma once

#include <vector>

#include "qschur/mixedalg/mixed_elem.hpp"

namespace qschur::mixedalg {

/// Data of the first straightening lemma: r, s in I(n,k) and a threshold j.
struct FirstLemmaInstance {
  std::vector<int> r;
  std::vector<int> s;
  int j = 1;
};

/// Data of the second straightening lemma. The sets are derived from the
/// increasing rows r', s' by derive_second_instance; r, s are arbitrary
/// multi-indices of the same lengths.
struct SecondLemmaInstance {
  std::vector<int> r_prime;
  std::vector<int> s_prime;
  std::vector<int> r;
  std::vector<int> s;
  int violator = 0;         // i: the maximal entry, and the least index violating first_i <= i
  std::vector<int> common;  // I = {i_1 < ... < i_k}
  std::vector<int> only_r;  // L_1
  std::vector<int> only_s;  // L_2
  std::vector<int> upper;   // D
  std::vector<int> rest;    // C
};

/// Fills the derived sets; returns false if r', s' are not increasing or the
/// maximal entry is not the least violator of first_i <= i.
bool derive_second_instance(SecondLemmaInstance& inst, int n);

/// m(j_1..j_t) = #{(l, c) : c in C, j_l < c}.
int m_statistic(const std::vector<int>& j, const std::vector<int>& rest);

/// Both sides of the first lemma, bidegree (k, k).
std::pair<MixedElem, MixedElem> first_lemma_sides(const FirstLemmaInstance& inst, int n);
/// The sum of the second lemma.
MixedElem second_lemma_sum(const SecondLemmaInstance& inst, int n);

/// Checks the congruence of the first lemma modulo the det^{(1)} sandwiches.
bool verify_first_lemma(const FirstLemmaInstance& inst, int n);
/// Checks that the sum of the second lemma vanishes modulo the det^{(1)} sandwiches.
bool verify_second_lemma(const SecondLemmaInstance& inst, int n);

/// All first-lemma instances with minor size 1..kmax, and all second-lemma
/// instances with |I| <= kmax whose bidegree stays within max_degree.
std::vector<FirstLemmaInstance> first_lemma_instances(int n, int kmax);
std::vector<SecondLemmaInstance> second_lemma_instances(int n, int kmax, int max_degree);

}  // namespace qschur::mixedalg
