#include "asf/report.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "asf/monomial.hpp"

namespace asf {

Json json_rational(const Rational& q) { return rat_str(q); }

Json json_element(const AffineWeylElement& w) { return encode_element(w); }

Json json_monomial(int n, const Monomial& m) {
  std::vector<std::array<int, 3>> triples;
  for (int idx = 0; idx < static_cast<int>(m.size()); ++idx) {
    if (m[idx] == 0) continue;
    auto [j, i] = var_pair(n, idx);
    triples.push_back({j, i, m[idx]});
  }
  std::sort(triples.begin(), triples.end());
  Json out = Json::array();
  for (const auto& t : triples) out.push_back(Json::array({t[0], t[1], t[2]}));
  return out;
}

Json json_membership(const MembershipReport& rep) {
  int n = rep.x.n();
  Json out;
  out["x"] = json_element(rep.x);
  out["y"] = json_element(rep.y);
  out["method"] = method_name(rep.method);
  out["overall"] = verdict_name(rep.overall);
  out["comparable"] = rep.comparable;
  Json bases = Json::array();
  for (const auto& b : rep.bases) {
    Json jb;
    jb["base"] = b.base;
    jb["feasible"] = b.feasible;
    jb["verdict"] = verdict_name(b.verdict);
    jb["dim"] = b.dim;
    if (rep.method == Method::Certificate && b.feasible) {
      jb["monomial"] = json_monomial(n, b.monomial);
      jb["coefficient"] = json_rational(b.coefficient);
    }
    if (rep.method == Method::Randomized && b.feasible)
      jb["degree_bound"] = b.degree_bound;
    bases.push_back(jb);
  }
  out["bases"] = bases;
  if (!rep.witness.empty()) {
    Json w = Json::object();
    for (int idx = 0; idx < static_cast<int>(rep.witness.size()); ++idx) {
      auto [j, i] = var_pair(n, idx);
      w["A_" + std::to_string(j) + "_" + std::to_string(i)] =
          json_rational(rep.witness[idx]);
    }
    out["witness"] = w;
    out["witness_trial"] = rep.witness_trial;
  }
  return out;
}

Json json_fixed_point(const FixedPointResult& res) {
  Json out;
  out["x"] = json_element(res.x);
  Json members = Json::array();
  for (const auto& m : res.members) members.push_back(json_element(m));
  out["members"] = members;
  Json interval = Json::array();
  for (const auto& m : res.expected) interval.push_back(json_element(m));
  out["interval"] = interval;
  out["match"] = res.matches_expected;
  out["any_inconclusive"] = res.any_inconclusive;
  Json reports = Json::array();
  for (const auto& r : res.reports) reports.push_back(json_membership(r));
  out["reports"] = reports;
  return out;
}

Json report_envelope(const std::string& kind, int n, std::uint64_t seed,
                     const SpectralParams& sp) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["tool_version"] = kToolVersion;
  doc["kind"] = kind;
  Json header;
  header["n"] = n;
  header["seed"] = seed;
  Json svals = Json::array();
  for (const auto& v : sp.s) svals.push_back(rat_str(v));
  header["s"] = svals;
  header["scale"] = kScaleStatement;
  doc["header"] = header;
  doc["payload"] = Json::object();
  return doc;
}

namespace {

bool is_rational_string(const std::string& s) {
  size_t k = 0;
  if (k < s.size() && s[k] == '-') ++k;
  size_t num_start = k;
  while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
  if (k == num_start || k >= s.size() || s[k] != '/') return false;
  ++k;
  size_t den_start = k;
  while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
  if (k == den_start || k != s.size()) return false;
  return s.substr(den_start) != "0";
}

bool is_verdict_string(const std::string& s) {
  return s == "nonzero" || s == "identically-zero" || s == "inconclusive";
}

struct Checker {
  std::vector<std::string> errors;

  void fail(const std::string& where, const std::string& what) {
    errors.push_back(where + ": " + what);
  }

  // Each accessor reports at most once per missing/mistyped field and
  // returns null on failure so later checks can keep going.
  const Json* field(const Json& obj, const std::string& where, const std::string& key) {
    if (!obj.is_object() || !obj.contains(key)) {
      fail(where, "missing \"" + key + "\"");
      return nullptr;
    }
    return &obj.at(key);
  }

  bool check_string(const Json& obj, const std::string& where, const std::string& key) {
    const Json* v = field(obj, where, key);
    if (!v) return false;
    if (!v->is_string()) {
      fail(where, "\"" + key + "\" must be a string");
      return false;
    }
    return true;
  }

  bool check_bool(const Json& obj, const std::string& where, const std::string& key) {
    const Json* v = field(obj, where, key);
    if (!v) return false;
    if (!v->is_boolean()) {
      fail(where, "\"" + key + "\" must be a boolean");
      return false;
    }
    return true;
  }

  bool check_int(const Json& obj, const std::string& where, const std::string& key) {
    const Json* v = field(obj, where, key);
    if (!v) return false;
    if (!v->is_number_integer() && !v->is_number_unsigned()) {
      fail(where, "\"" + key + "\" must be an integer");
      return false;
    }
    return true;
  }

  const Json* check_array(const Json& obj, const std::string& where, const std::string& key) {
    const Json* v = field(obj, where, key);
    if (!v) return nullptr;
    if (!v->is_array()) {
      fail(where, "\"" + key + "\" must be an array");
      return nullptr;
    }
    return v;
  }

  const Json* check_object(const Json& obj, const std::string& where, const std::string& key) {
    const Json* v = field(obj, where, key);
    if (!v) return nullptr;
    if (!v->is_object()) {
      fail(where, "\"" + key + "\" must be an object");
      return nullptr;
    }
    return v;
  }

  void check_element_array(const Json& obj, const std::string& where, const std::string& key) {
    const Json* arr = check_array(obj, where, key);
    if (!arr) return;
    for (size_t k = 0; k < arr->size(); ++k)
      if (!(*arr)[k].is_string())
        fail(where + "." + key + "[" + std::to_string(k) + "]", "must be an element string");
  }

  void check_membership(const Json& rep, const std::string& where) {
    check_string(rep, where, "x");
    check_string(rep, where, "y");
    check_string(rep, where, "method");
    if (check_string(rep, where, "overall") &&
        !is_verdict_string(rep.at("overall").get<std::string>()))
      fail(where, "\"overall\" is not a verdict");
    check_bool(rep, where, "comparable");
    const Json* bases = check_array(rep, where, "bases");
    if (bases) {
      for (size_t k = 0; k < bases->size(); ++k) {
        std::string bw = where + ".bases[" + std::to_string(k) + "]";
        const Json& b = (*bases)[k];
        check_int(b, bw, "base");
        check_bool(b, bw, "feasible");
        if (check_string(b, bw, "verdict") &&
            !is_verdict_string(b.at("verdict").get<std::string>()))
          fail(bw, "\"verdict\" is not a verdict");
      }
    }
    if (rep.is_object() && rep.contains("witness")) {
      if (!rep.at("witness").is_object()) {
        fail(where, "\"witness\" must be an object");
      } else {
        for (const auto& [key, val] : rep.at("witness").items())
          if (!val.is_string() || !is_rational_string(val.get<std::string>()))
            fail(where + ".witness." + key, "must be a rational string");
      }
    }
  }

  void check_fixed_point(const Json& fp, const std::string& where) {
    check_string(fp, where, "x");
    check_element_array(fp, where, "members");
    check_element_array(fp, where, "interval");
    check_bool(fp, where, "match");
    check_bool(fp, where, "any_inconclusive");
    const Json* reports = check_array(fp, where, "reports");
    if (reports)
      for (size_t k = 0; k < reports->size(); ++k)
        check_membership((*reports)[k], where + ".reports[" + std::to_string(k) + "]");
  }
};

}  // namespace

std::vector<std::string> validate_report(const Json& doc) {
  Checker c;
  if (!doc.is_object()) {
    c.fail("$", "document must be an object");
    return c.errors;
  }
  if (c.check_string(doc, "$", "schema_version") &&
      doc.at("schema_version").get<std::string>() != kSchemaVersion)
    c.fail("$", "unsupported schema_version");
  c.check_string(doc, "$", "tool_version");

  std::string kind;
  if (c.check_string(doc, "$", "kind")) {
    kind = doc.at("kind").get<std::string>();
    if (kind != "enumerate-f" && kind != "fixed-points" && kind != "verify-theorem" &&
        kind != "identities")
      c.fail("$", "unknown kind \"" + kind + "\"");
  }

  const Json* header = c.check_object(doc, "$", "header");
  if (header) {
    c.check_int(*header, "$.header", "n");
    c.check_int(*header, "$.header", "seed");
    const Json* svals = c.check_array(*header, "$.header", "s");
    if (svals)
      for (size_t k = 0; k < svals->size(); ++k)
        if (!(*svals)[k].is_string() || !is_rational_string((*svals)[k].get<std::string>()))
          c.fail("$.header.s[" + std::to_string(k) + "]", "must be a rational string");
    c.check_string(*header, "$.header", "scale");
    if (header->contains("timings") && !header->at("timings").is_object())
      c.fail("$.header", "\"timings\" must be an object");
  }

  const Json* payload = c.check_object(doc, "$", "payload");
  if (!payload || kind.empty()) return c.errors;

  if (kind == "enumerate-f") {
    const Json* elems = c.check_array(*payload, "$.payload", "elements");
    if (elems) {
      for (size_t k = 0; k < elems->size(); ++k) {
        std::string ew = "$.payload.elements[" + std::to_string(k) + "]";
        const Json& e = (*elems)[k];
        c.check_string(e, ew, "element");
        c.check_int(e, ew, "length");
        c.check_array(e, ew, "vertex_images");
      }
    }
    c.check_int(*payload, "$.payload", "count");
  } else if (kind == "fixed-points") {
    c.check_fixed_point(*payload, "$.payload");
    const Json* rows = c.check_array(*payload, "$.payload", "rows");
    if (rows) {
      for (size_t k = 0; k < rows->size(); ++k) {
        std::string rw = "$.payload.rows[" + std::to_string(k) + "]";
        const Json& r = (*rows)[k];
        c.check_string(r, rw, "y");
        c.check_bool(r, rw, "expected");
        const Json* verdicts = c.check_object(r, rw, "verdicts");
        if (verdicts)
          for (const auto& [key, val] : verdicts->items())
            if (!val.is_string() || !is_verdict_string(val.get<std::string>()))
              c.fail(rw + ".verdicts." + key, "must be a verdict");
      }
    }
  } else if (kind == "verify-theorem") {
    const Json* comps = c.check_array(*payload, "$.payload", "components");
    if (comps) {
      for (size_t k = 0; k < comps->size(); ++k) {
        std::string cw = "$.payload.components[" + std::to_string(k) + "]";
        const Json& e = (*comps)[k];
        c.check_string(e, cw, "x");
        c.check_bool(e, cw, "pass");
        c.check_element_array(e, cw, "members");
        c.check_element_array(e, cw, "interval");
      }
    }
    c.check_int(*payload, "$.payload", "pass_count");
    c.check_int(*payload, "$.payload", "fail_count");
    if (c.check_string(*payload, "$.payload", "status")) {
      std::string st = payload->at("status").get<std::string>();
      if (st != "PASS" && st != "FAIL" && st != "INCONCLUSIVE")
        c.fail("$.payload", "bad status \"" + st + "\"");
    }
  } else if (kind == "identities") {
    const Json* ids = c.check_array(*payload, "$.payload", "identities");
    if (ids) {
      for (size_t k = 0; k < ids->size(); ++k) {
        std::string iw = "$.payload.identities[" + std::to_string(k) + "]";
        const Json& e = (*ids)[k];
        c.check_string(e, iw, "name");
        c.check_bool(e, iw, "pass");
        c.check_int(e, iw, "degree_bound");
        c.check_int(e, iw, "evaluations");
      }
    }
    c.check_bool(*payload, "$.payload", "all_pass");
  }
  return c.errors;
}

}  // namespace asf
