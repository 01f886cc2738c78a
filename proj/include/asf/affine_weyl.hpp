#pragma once

#include <string>
#include <vector>

#include "asf/common.hpp"
#include "asf/root_system.hpp"

namespace asf {

// Element w = wbar t^mu of the extended-by-nothing affine symmetric group
// (sum of mu is zero). perm stores 1-based images: perm[k-1] = wbar(k).
// Action on vectors: w(v) has (w v)[wbar(k)] = v[k] + mu[k].
struct AffineWeylElement {
  std::vector<int> perm;
  std::vector<Int> trans;

  int n() const { return static_cast<int>(perm.size()); }
  bool operator==(const AffineWeylElement& o) const {
    return perm == o.perm && trans == o.trans;
  }
  bool operator<(const AffineWeylElement& o) const {
    if (perm != o.perm) return perm < o.perm;
    return trans < o.trans;
  }
};

AffineWeylElement identity_element(int n);
// i in 0..n-1; i = 0 is the affine reflection.
AffineWeylElement simple_reflection(int n, int i);
// Longest finite permutation k -> n + 1 - k, zero translation.
AffineWeylElement w0(int n);
AffineWeylElement translation(const std::vector<Int>& mu);

AffineWeylElement multiply(const AffineWeylElement& a, const AffineWeylElement& b);
AffineWeylElement inverse(const AffineWeylElement& w);

std::vector<Int> act_on_vector(const AffineWeylElement& w, const std::vector<Int>& v);
AffineRoot act_on_affine_root(const AffineWeylElement& w, const AffineRoot& a);

// base = 0 gives w(0); base = i in 1..n-1 gives w(omega_i) where omega_i is
// the 0/1 vector with i leading ones.
std::vector<Int> vertex_image(const AffineWeylElement& w, int base);
std::vector<std::vector<Int>> all_vertex_images(const AffineWeylElement& w);

Int length(const AffineWeylElement& w);
// Independent count of affine hyperplanes separating the base alcove from its
// image; used to cross-check the closed-form length.
Int length_hyperplane_scan(const AffineWeylElement& w);

bool has_right_descent(const AffineWeylElement& w, int i);
std::vector<int> reduced_word(const AffineWeylElement& w);
AffineWeylElement product_of_word(int n, const std::vector<int>& word);

bool bruhat_leq(const AffineWeylElement& y, const AffineWeylElement& w);
// Dominance comparison of all vertex images; valid only for minimal coset
// representatives, where it agrees with Bruhat order. Throws otherwise.
bool bruhat_leq_fw(const AffineWeylElement& y, const AffineWeylElement& w);
std::vector<AffineWeylElement> bruhat_interval_below(const AffineWeylElement& w);

// Minimal length in the coset W_fin * w: no finite left descents.
bool is_min_coset_rep(const AffineWeylElement& w);
// Equivalent test: every vertex image is weakly decreasing.
bool vertex_images_dominant(const AffineWeylElement& w);
AffineWeylElement min_coset_rep(const AffineWeylElement& w);

// Fundamental box: minimal coset reps whose inverse also sends the roots
// e_{i+1} - e_i + delta to positive roots.
bool in_fundamental_box(const AffineWeylElement& w);
// Equivalent test: vertex images weakly decreasing with consecutive
// coordinate drops of at most 1.
bool box_vertex_criterion(const AffineWeylElement& w);
std::vector<AffineWeylElement> enumerate_fundamental_box(int n);
// Unique longest element of the box; checks the length factorization
// l(wf) = l(x) + l(x^{-1} wf) for every box element x.
AffineWeylElement longest_box_element(int n);

std::vector<AffineWeylElement> weyl_finite_elements(int n);

std::string encode_element(const AffineWeylElement& w);
// Accepts the encode_element format or a space-separated word "s0 s2 s1".
AffineWeylElement parse_element(int n, const std::string& text);

std::vector<AffineWeylElement> sorted_canonical(std::vector<AffineWeylElement> v);

}  // namespace asf
