#include "asf/affine_weyl.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace asf {

AffineWeylElement identity_element(int n) {
  if (n < 2) throw std::invalid_argument("identity_element: need n >= 2");
  AffineWeylElement w;
  w.perm.resize(n);
  std::iota(w.perm.begin(), w.perm.end(), 1);
  w.trans.assign(n, 0);
  return w;
}

AffineWeylElement simple_reflection(int n, int i) {
  if (i < 0 || i >= n) throw std::invalid_argument("simple_reflection: index out of range");
  AffineWeylElement w = identity_element(n);
  if (i >= 1) {
    std::swap(w.perm[i - 1], w.perm[i]);
  } else {
    std::swap(w.perm[0], w.perm[n - 1]);
    w.trans[0] = -1;
    w.trans[n - 1] = 1;
  }
  return w;
}

AffineWeylElement w0(int n) {
  AffineWeylElement w = identity_element(n);
  std::reverse(w.perm.begin(), w.perm.end());
  return w;
}

AffineWeylElement translation(const std::vector<Int>& mu) {
  if (mu.size() < 2) throw std::invalid_argument("translation: need n >= 2");
  Int sum = std::accumulate(mu.begin(), mu.end(), Int{0});
  if (sum != 0) throw std::invalid_argument("translation: coordinates must sum to zero");
  AffineWeylElement w = identity_element(static_cast<int>(mu.size()));
  w.trans = mu;
  return w;
}

AffineWeylElement multiply(const AffineWeylElement& a, const AffineWeylElement& b) {
  int n = a.n();
  if (b.n() != n) throw std::invalid_argument("multiply: rank mismatch");
  AffineWeylElement c;
  c.perm.resize(n);
  c.trans.resize(n);
  for (int k = 1; k <= n; ++k) {
    int bk = b.perm[k - 1];
    c.perm[k - 1] = a.perm[bk - 1];
    c.trans[k - 1] = a.trans[bk - 1] + b.trans[k - 1];
  }
  return c;
}

AffineWeylElement inverse(const AffineWeylElement& w) {
  int n = w.n();
  AffineWeylElement v;
  v.perm.resize(n);
  v.trans.resize(n);
  for (int k = 1; k <= n; ++k) v.perm[w.perm[k - 1] - 1] = k;
  for (int m = 1; m <= n; ++m) v.trans[m - 1] = -w.trans[v.perm[m - 1] - 1];
  return v;
}

std::vector<Int> act_on_vector(const AffineWeylElement& w, const std::vector<Int>& v) {
  int n = w.n();
  if (static_cast<int>(v.size()) != n)
    throw std::invalid_argument("act_on_vector: dimension mismatch");
  std::vector<Int> out(n);
  for (int k = 1; k <= n; ++k) out[w.perm[k - 1] - 1] = v[k - 1] + w.trans[k - 1];
  return out;
}

AffineRoot act_on_affine_root(const AffineWeylElement& w, const AffineRoot& a) {
  int i = a.root.i, j = a.root.j;
  AffineRoot out;
  out.root = FiniteRoot{w.perm[i - 1], w.perm[j - 1]};
  out.level = a.level - (w.trans[i - 1] - w.trans[j - 1]);
  return out;
}

std::vector<Int> vertex_image(const AffineWeylElement& w, int base) {
  int n = w.n();
  if (base < 0 || base >= n) throw std::invalid_argument("vertex_image: base out of range");
  std::vector<Int> v(n, 0);
  for (int k = 0; k < base; ++k) v[k] = 1;
  return act_on_vector(w, v);
}

std::vector<std::vector<Int>> all_vertex_images(const AffineWeylElement& w) {
  std::vector<std::vector<Int>> out;
  out.reserve(w.n());
  for (int base = 0; base < w.n(); ++base) out.push_back(vertex_image(w, base));
  return out;
}

Int length(const AffineWeylElement& w) {
  int n = w.n();
  Int total = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      // alpha = e_i - e_j; count crossings max(0, <alpha,mu> + [wbar alpha < 0] - [alpha < 0])
      Int term = w.trans[i - 1] - w.trans[j - 1];
      if (w.perm[i - 1] > w.perm[j - 1]) term += 1;
      if (i > j) term -= 1;
      if (term > 0) total += term;
    }
  return total;
}

Int length_hyperplane_scan(const AffineWeylElement& w) {
  // Counts hyperplanes <alpha, .> = k (alpha positive, k integer) separating a
  // base alcove interior point p0 = (n-1, n-2, ..., 0)/n from w(p0). Neither
  // pairing is ever an integer, so the count is |floor - floor|.
  int n = w.n();
  AffineWeylElement q = inverse(w);
  Int total = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      int qi = q.perm[i - 1], qj = q.perm[j - 1];
      Int num = (qj - qi) + static_cast<Int>(n) * (w.trans[qi - 1] - w.trans[qj - 1]);
      if (num % n == 0) throw std::logic_error("length_hyperplane_scan: point on a wall");
      Int f = num >= 0 ? num / n : -((-num + n - 1) / n);
      total += f >= 0 ? f : -f;
    }
  return total;
}

bool has_right_descent(const AffineWeylElement& w, int i) {
  int n = w.n();
  if (i < 0 || i >= n) throw std::invalid_argument("has_right_descent: index out of range");
  AffineRoot a = i == 0 ? AffineRoot{FiniteRoot{n, 1}, 1} : AffineRoot{FiniteRoot{i, i + 1}, 0};
  return !affine_root_positive(act_on_affine_root(w, a));
}

std::vector<int> reduced_word(const AffineWeylElement& w) {
  int n = w.n();
  AffineWeylElement cur = w;
  Int len = length(cur);
  std::vector<int> acc;
  acc.reserve(static_cast<size_t>(len));
  while (len > 0) {
    int d = -1;
    for (int i = 0; i < n; ++i)
      if (has_right_descent(cur, i)) {
        d = i;
        break;
      }
    if (d < 0) throw std::logic_error("reduced_word: positive length but no descent");
    cur = multiply(cur, simple_reflection(n, d));
    Int next = length(cur);
    if (next != len - 1) throw std::logic_error("reduced_word: descent did not shorten");
    len = next;
    acc.push_back(d);
  }
  std::reverse(acc.begin(), acc.end());
  return acc;
}

AffineWeylElement product_of_word(int n, const std::vector<int>& word) {
  AffineWeylElement w = identity_element(n);
  for (int letter : word) w = multiply(w, simple_reflection(n, letter));
  return w;
}

bool bruhat_leq(const AffineWeylElement& y0, const AffineWeylElement& w0_) {
  if (y0.n() != w0_.n()) throw std::invalid_argument("bruhat_leq: rank mismatch");
  AffineWeylElement y = y0, w = w0_;
  int n = y.n();
  while (true) {
    Int ly = length(y), lw = length(w);
    if (ly > lw) return false;
    if (ly == 0) return true;
    int d = -1;
    for (int i = 0; i < n; ++i)
      if (has_right_descent(w, i)) {
        d = i;
        break;
      }
    if (d < 0) throw std::logic_error("bruhat_leq: positive length but no descent");
    AffineWeylElement s = simple_reflection(n, d);
    if (has_right_descent(y, d)) y = multiply(y, s);
    w = multiply(w, s);
  }
}

bool bruhat_leq_fw(const AffineWeylElement& y, const AffineWeylElement& w) {
  if (y.n() != w.n()) throw std::invalid_argument("bruhat_leq_fw: rank mismatch");
  if (!vertex_images_dominant(y) || !vertex_images_dominant(w))
    throw std::invalid_argument("bruhat_leq_fw: arguments must be minimal coset representatives");
  for (int base = 0; base < y.n(); ++base) {
    if (!dominance_leq_star(vertex_image(y, base), vertex_image(w, base))) return false;
  }
  return true;
}

std::vector<AffineWeylElement> bruhat_interval_below(const AffineWeylElement& w) {
  std::vector<int> word = reduced_word(w);
  if (word.size() > 26)
    throw std::invalid_argument("bruhat_interval_below: element too long to enumerate");
  int n = w.n();
  std::set<AffineWeylElement> cur;
  cur.insert(identity_element(n));
  for (int letter : word) {
    AffineWeylElement s = simple_reflection(n, letter);
    std::set<AffineWeylElement> next = cur;
    for (const auto& u : cur) next.insert(multiply(u, s));
    cur.swap(next);
  }
  return sorted_canonical(std::vector<AffineWeylElement>(cur.begin(), cur.end()));
}

bool is_min_coset_rep(const AffineWeylElement& w) {
  int n = w.n();
  AffineWeylElement wi = inverse(w);
  for (int i = 1; i < n; ++i)
    if (!affine_root_positive(act_on_affine_root(wi, AffineRoot{FiniteRoot{i, i + 1}, 0})))
      return false;
  return true;
}

bool vertex_images_dominant(const AffineWeylElement& w) {
  for (const auto& v : all_vertex_images(w))
    if (!weakly_decreasing(v)) return false;
  return true;
}

AffineWeylElement min_coset_rep(const AffineWeylElement& w0_) {
  AffineWeylElement w = w0_;
  int n = w.n();
  while (true) {
    AffineWeylElement wi = inverse(w);
    int d = -1;
    for (int i = 1; i < n; ++i)
      if (!affine_root_positive(act_on_affine_root(wi, AffineRoot{FiniteRoot{i, i + 1}, 0}))) {
        d = i;
        break;
      }
    if (d < 0) return w;
    w = multiply(simple_reflection(n, d), w);
  }
}

bool in_fundamental_box(const AffineWeylElement& w) {
  if (!is_min_coset_rep(w)) return false;
  int n = w.n();
  AffineWeylElement wi = inverse(w);
  for (int i = 1; i < n; ++i)
    if (!affine_root_positive(act_on_affine_root(wi, AffineRoot{FiniteRoot{i + 1, i}, 1})))
      return false;
  return true;
}

bool box_vertex_criterion(const AffineWeylElement& w) {
  for (const auto& v : all_vertex_images(w))
    for (size_t k = 1; k < v.size(); ++k) {
      Int d = v[k - 1] - v[k];
      if (d != 0 && d != 1) return false;
    }
  return true;
}

static void sum_zero_vectors(int n, Int c, std::vector<Int>& cur, Int partial,
                             std::vector<std::vector<Int>>& out) {
  if (static_cast<int>(cur.size()) == n - 1) {
    Int last = -partial;
    if (last >= -c && last <= c) {
      cur.push_back(last);
      out.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  for (Int v = -c; v <= c; ++v) {
    cur.push_back(v);
    sum_zero_vectors(n, c, cur, partial + v, out);
    cur.pop_back();
  }
}

std::vector<AffineWeylElement> enumerate_fundamental_box(int n) {
  if (n < 2) throw std::invalid_argument("enumerate_fundamental_box: need n >= 2");
  auto scan = [n](Int c) {
    std::vector<std::vector<Int>> shifts;
    std::vector<Int> cur;
    sum_zero_vectors(n, c, cur, 0, shifts);
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    std::vector<AffineWeylElement> out;
    do {
      for (const auto& t : shifts) {
        AffineWeylElement w{p, t};
        if (in_fundamental_box(w)) out.push_back(w);
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return sorted_canonical(std::move(out));
  };
  // Box translations are bounded by n in every coordinate (vertex images are
  // weakly decreasing with drops at most 1), so the widening scan terminates.
  Int cap = n;
  Int c = std::min<Int>(2, cap);
  std::vector<AffineWeylElement> prev = scan(c);
  while (c < cap) {
    c = std::min<Int>(2 * c, cap);
    std::vector<AffineWeylElement> next = scan(c);
    if (next == prev) return next;
    prev = std::move(next);
  }
  return prev;
}

AffineWeylElement longest_box_element(int n) {
  std::vector<AffineWeylElement> box = enumerate_fundamental_box(n);
  Int best = -1;
  size_t arg = 0;
  int ties = 0;
  for (size_t k = 0; k < box.size(); ++k) {
    Int l = length(box[k]);
    if (l > best) {
      best = l;
      arg = k;
      ties = 1;
    } else if (l == best) {
      ++ties;
    }
  }
  if (ties != 1) throw std::logic_error("longest_box_element: maximum is not unique");
  const AffineWeylElement& wf = box[arg];
  for (const auto& x : box) {
    AffineWeylElement rest = multiply(inverse(x), wf);
    if (length(x) + length(rest) != best)
      throw std::logic_error("longest_box_element: length factorization failed");
  }
  return wf;
}

std::vector<AffineWeylElement> weyl_finite_elements(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<AffineWeylElement> out;
  std::vector<Int> zero(n, 0);
  do {
    out.push_back(AffineWeylElement{p, zero});
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::string encode_element(const AffineWeylElement& w) {
  std::ostringstream os;
  os << "perm=[";
  for (int k = 0; k < w.n(); ++k) os << (k ? "," : "") << w.perm[k];
  os << "];trans=[";
  for (int k = 0; k < w.n(); ++k) os << (k ? "," : "") << w.trans[k];
  os << "]";
  return os.str();
}

static std::vector<Int> parse_int_list(const std::string& s) {
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw UsageError("expected bracketed list, got: " + s);
  std::vector<Int> out;
  std::string body = s.substr(1, s.size() - 2);
  if (body.empty()) return out;
  std::istringstream is(body);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    try {
      size_t pos = 0;
      Int v = std::stoll(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const UsageError&) {
      throw;
    } catch (...) {
      throw UsageError("bad integer in list: '" + tok + "'");
    }
  }
  return out;
}

AffineWeylElement parse_element(int n, const std::string& raw) {
  size_t a = raw.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) throw UsageError("empty element description");
  size_t b = raw.find_last_not_of(" \t\r\n");
  std::string text = raw.substr(a, b - a + 1);

  if (text == "id" || text == "e") return identity_element(n);

  if (text.rfind("perm=", 0) == 0) {
    size_t semi = text.find(';');
    if (semi == std::string::npos || text.compare(semi + 1, 6, "trans=") != 0)
      throw UsageError("expected perm=[...];trans=[...], got: " + text);
    std::vector<Int> perm_l = parse_int_list(text.substr(5, semi - 5));
    std::vector<Int> trans_l = parse_int_list(text.substr(semi + 7));
    if (static_cast<int>(perm_l.size()) != n || static_cast<int>(trans_l.size()) != n)
      throw UsageError("element lists must have length n");
    AffineWeylElement w;
    std::vector<bool> seen(n, false);
    for (Int v : perm_l) {
      if (v < 1 || v > n || seen[v - 1]) throw UsageError("perm is not a permutation of 1..n");
      seen[v - 1] = true;
      w.perm.push_back(static_cast<int>(v));
    }
    w.trans = trans_l;
    if (std::accumulate(w.trans.begin(), w.trans.end(), Int{0}) != 0)
      throw UsageError("trans must sum to zero");
    return w;
  }

  std::istringstream is(text);
  std::string tok;
  std::vector<int> word;
  while (is >> tok) {
    if (tok.size() < 2 || tok[0] != 's') throw UsageError("bad generator token: '" + tok + "'");
    int idx;
    try {
      size_t pos = 0;
      idx = std::stoi(tok.substr(1), &pos);
      if (pos != tok.size() - 1) throw std::invalid_argument(tok);
    } catch (...) {
      throw UsageError("bad generator token: '" + tok + "'");
    }
    if (idx < 0 || idx >= n) throw UsageError("generator index out of range: '" + tok + "'");
    word.push_back(idx);
  }
  if (word.empty()) throw UsageError("empty element description");
  return product_of_word(n, word);
}

std::vector<AffineWeylElement> sorted_canonical(std::vector<AffineWeylElement> v) {
  std::vector<std::pair<Int, AffineWeylElement>> keyed;
  keyed.reserve(v.size());
  for (auto& w : v) keyed.emplace_back(length(w), std::move(w));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
  std::vector<AffineWeylElement> out;
  out.reserve(keyed.size());
  for (auto& kv : keyed) out.push_back(std::move(kv.second));
  return out;
}

}  // namespace asf
