#include "asf/svg.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <deque>
#include <map>
#include <set>
#include <vector>

namespace asf {

namespace {

struct Pt {
  double x = 0, y = 0;
};

// Kills the all-ones direction, so sum-shifted vertex images of different
// bases land consistently.
Pt project(int n, const std::vector<Int>& v) {
  if (n == 2) return {static_cast<double>(v[0] - v[1]), 0.0};
  static const double px[3] = {0.0, 0.8660254037844386, -0.8660254037844386};
  static const double py[3] = {1.0, -0.5, -0.5};
  Pt p;
  for (int k = 0; k < 3; ++k) {
    p.x += px[k] * static_cast<double>(v[k]);
    p.y += py[k] * static_cast<double>(v[k]);
  }
  return p;
}

// Alcove corners in abstract plane coordinates. Rank two alcoves are unit
// intervals on a line; give them a small height so they render as cells.
std::vector<Pt> alcove_corners(int n, const AffineWeylElement& w) {
  auto imgs = all_vertex_images(w);
  if (n == 2) {
    double a = project(n, imgs[0]).x;
    double b = project(n, imgs[1]).x;
    if (a > b) std::swap(a, b);
    return {{a, 0.0}, {b, 0.0}, {b, 0.6}, {a, 0.6}};
  }
  std::vector<Pt> pts;
  for (const auto& v : imgs) pts.push_back(project(n, v));
  return pts;
}

std::vector<AffineWeylElement> length_ball(int n, int radius) {
  std::set<AffineWeylElement> seen;
  std::deque<std::pair<AffineWeylElement, int>> queue;
  queue.push_back({identity_element(n), 0});
  seen.insert(identity_element(n));
  while (!queue.empty()) {
    auto [w, d] = queue.front();
    queue.pop_front();
    if (d == radius) continue;
    for (int i = 0; i < n; ++i) {
      auto next = multiply(w, simple_reflection(n, i));
      if (seen.insert(next).second) queue.push_back({next, d + 1});
    }
  }
  return {seen.begin(), seen.end()};
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

void escape_into(std::string& out, const std::string& text) {
  for (char ch : text) {
    if (ch == '<') out += "&lt;";
    else if (ch == '>') out += "&gt;";
    else if (ch == '&') out += "&amp;";
    else out += ch;
  }
}

std::string render(int n, const AffineWeylElement* x) {
  if (n != 2 && n != 3) throw UsageError("alcove figures support n = 2 and n = 3 only");

  std::set<AffineWeylElement> box_set, highlight;
  for (const auto& b : enumerate_fundamental_box(n)) box_set.insert(b);
  if (x) {
    if (x->n() != n) throw UsageError("element rank does not match n");
    if (!in_fundamental_box(*x))
      throw UsageError("highlight label must lie in the fundamental box");
    for (const auto& y : bruhat_interval_below(multiply(w0(n), *x))) highlight.insert(y);
  }

  std::set<AffineWeylElement> draw;
  for (const auto& w : length_ball(n, 6)) draw.insert(w);
  draw.insert(box_set.begin(), box_set.end());
  draw.insert(highlight.begin(), highlight.end());

  double scale = 60.0, margin = 20.0;
  double lo_x = 1e9, hi_x = -1e9, lo_y = 1e9, hi_y = -1e9;
  std::map<AffineWeylElement, std::vector<Pt>> corners;
  for (const auto& w : draw) {
    auto pts = alcove_corners(n, w);
    for (const auto& p : pts) {
      lo_x = std::min(lo_x, p.x);
      hi_x = std::max(hi_x, p.x);
      lo_y = std::min(lo_y, p.y);
      hi_y = std::max(hi_y, p.y);
    }
    corners.emplace(w, std::move(pts));
  }
  double width = (hi_x - lo_x) * scale + 2 * margin;
  double height = (hi_y - lo_y) * scale + 2 * margin;
  auto map_x = [&](double v) { return margin + (v - lo_x) * scale; };
  auto map_y = [&](double v) { return margin + (hi_y - v) * scale; };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) +
         "\" height=\"" + fmt(height) + "\" viewBox=\"0 0 " + fmt(width) + " " +
         fmt(height) + "\">\n";
  out += "<g stroke=\"#777777\" stroke-width=\"1\">\n";
  for (const auto& [w, pts] : corners) {
    const char* fill = "#f2f2f2";
    if (highlight.count(w)) fill = "#7db2e8";
    else if (box_set.count(w)) fill = "#f5d87a";
    out += "<polygon points=\"";
    for (size_t k = 0; k < pts.size(); ++k) {
      if (k) out += ' ';
      out += fmt(map_x(pts[k].x)) + "," + fmt(map_y(pts[k].y));
    }
    out += "\" fill=\"";
    out += fill;
    out += "\"><title>";
    escape_into(out, encode_element(w));
    out += "</title></polygon>\n";
  }
  out += "</g>\n";

  const auto& base = corners.at(identity_element(n));
  out += "<polygon points=\"";
  for (size_t k = 0; k < base.size(); ++k) {
    if (k) out += ' ';
    out += fmt(map_x(base[k].x)) + "," + fmt(map_y(base[k].y));
  }
  out += "\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2.5\"/>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace

std::string alcove_svg(int n) { return render(n, nullptr); }

std::string alcove_svg(int n, const AffineWeylElement& x) { return render(n, &x); }

namespace {

bool scan_name(const std::string& s, size_t& k) {
  size_t start = k;
  while (k < s.size() &&
         (std::isalnum(static_cast<unsigned char>(s[k])) || s[k] == ':' || s[k] == '-' ||
          s[k] == '_' || s[k] == '.'))
    ++k;
  return k > start;
}

void skip_space(const std::string& s, size_t& k) {
  while (k < s.size() && std::isspace(static_cast<unsigned char>(s[k]))) ++k;
}

}  // namespace

bool svg_well_formed(const std::string& doc, std::string* error) {
  auto fail = [&](const std::string& why) {
    if (error) *error = why;
    return false;
  };
  std::vector<std::string> stack;
  bool saw_root = false;
  size_t k = 0;
  while (k < doc.size()) {
    char ch = doc[k];
    if (ch == '<') {
      if (doc.compare(k, 4, "<!--") == 0) {
        size_t end = doc.find("-->", k + 4);
        if (end == std::string::npos) return fail("unterminated comment");
        k = end + 3;
        continue;
      }
      if (doc.compare(k, 2, "<?") == 0) {
        size_t end = doc.find("?>", k + 2);
        if (end == std::string::npos) return fail("unterminated processing instruction");
        k = end + 2;
        continue;
      }
      ++k;
      bool closing = k < doc.size() && doc[k] == '/';
      if (closing) ++k;
      size_t name_start = k;
      if (!scan_name(doc, k)) return fail("tag without a name");
      std::string name = doc.substr(name_start, k - name_start);
      if (closing) {
        skip_space(doc, k);
        if (k >= doc.size() || doc[k] != '>') return fail("malformed closing tag " + name);
        ++k;
        if (stack.empty() || stack.back() != name)
          return fail("mismatched closing tag " + name);
        stack.pop_back();
        continue;
      }
      // Attributes until '>' or '/>'.
      bool self_closed = false;
      while (true) {
        skip_space(doc, k);
        if (k >= doc.size()) return fail("unterminated tag " + name);
        if (doc[k] == '>') {
          ++k;
          break;
        }
        if (doc[k] == '/') {
          ++k;
          if (k >= doc.size() || doc[k] != '>') return fail("stray slash in tag " + name);
          ++k;
          self_closed = true;
          break;
        }
        if (!scan_name(doc, k)) return fail("bad attribute in tag " + name);
        skip_space(doc, k);
        if (k >= doc.size() || doc[k] != '=') return fail("attribute without value in " + name);
        ++k;
        skip_space(doc, k);
        if (k >= doc.size() || (doc[k] != '"' && doc[k] != '\''))
          return fail("unquoted attribute value in " + name);
        char quote = doc[k++];
        while (k < doc.size() && doc[k] != quote) {
          if (doc[k] == '<') return fail("raw '<' inside attribute value in " + name);
          ++k;
        }
        if (k >= doc.size()) return fail("unterminated attribute value in " + name);
        ++k;
      }
      if (stack.empty()) {
        if (saw_root) return fail("content after the root element");
        if (name != "svg") return fail("root element is not svg");
        saw_root = true;
        if (self_closed) continue;
      }
      if (!self_closed) stack.push_back(name);
      continue;
    }
    if (ch == '&') {
      size_t end = doc.find(';', k);
      if (end == std::string::npos || end - k > 8) return fail("bare '&' in text");
      k = end + 1;
      continue;
    }
    if (ch == '>') return fail("stray '>' in text");
    if (!stack.empty() || std::isspace(static_cast<unsigned char>(ch))) {
      ++k;
      continue;
    }
    return fail("text outside the root element");
  }
  if (!stack.empty()) return fail("unclosed tag " + stack.back());
  if (!saw_root) return fail("no svg root element");
  return true;
}

}  // namespace asf
