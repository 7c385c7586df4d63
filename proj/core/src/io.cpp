#include "sqtriplets/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "sqtriplets/error.hpp"

namespace sqt {

namespace {

using nlohmann::json;

json matrix_to_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(rat_to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RatMatrix matrix_from_json(const json& rows, std::size_t want_rows,
                           std::size_t want_cols) {
  if (!rows.is_array() || rows.size() != want_rows)
    throw domain_error("matrix row count mismatch");
  RatMatrix m(want_rows, want_cols);
  for (std::size_t i = 0; i < want_rows; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || row.size() != want_cols)
      throw domain_error("matrix column count mismatch");
    for (std::size_t j = 0; j < want_cols; ++j)
      m(i, j) = parse_rat(row[j].get<std::string>());
  }
  return m;
}

unsigned key_to_mask(const std::string& key, int n) {
  unsigned mask = 0;
  for (char ch : key) {
    if (ch < '1' || ch > '9') throw domain_error("bad component key: " + key);
    const int v = ch - '0';
    if (v > n) throw domain_error("component key out of range: " + key);
    mask |= 1u << (v - 1);
  }
  return mask;
}

json parse_document(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw domain_error("malformed JSON document");
  return doc;
}

}  // namespace

std::string module_to_string(const SqModule& m) {
  const int n = m.n();
  if (n > 9) throw domain_error("module files support n <= 9");
  json doc;
  doc["n"] = n;
  json comps = json::object();
  for (unsigned r = 0; r < m.degree_count(); ++r)
    if (m.dim(r) > 0) comps[mask_key(r, n)] = m.dim(r);
  doc["components"] = std::move(comps);
  json mult = json::object();
  for (unsigned r = 0; r < m.degree_count(); ++r) {
    for (int v = 1; v <= n; ++v) {
      if ((r >> (v - 1)) & 1u) continue;
      const unsigned rv = r | (1u << (v - 1));
      if (m.dim(r) == 0 || m.dim(rv) == 0) continue;
      const RatMatrix& mat = m.mult(v, r);
      if (mat.is_zero()) continue;
      mult[std::to_string(v) + "@" + mask_key(r, n)] = matrix_to_json(mat);
    }
  }
  doc["mult"] = std::move(mult);
  return doc.dump(2) + "\n";
}

SqModule module_from_string(const std::string& text) {
  const json doc = parse_document(text);
  if (!doc.contains("n") || !doc.contains("components"))
    throw domain_error("module file needs fields n and components");
  const int n = doc["n"].get<int>();
  if (n < 0 || n > 9) throw domain_error("module files support 0 <= n <= 9");
  SqModule m(n);
  for (const auto& [key, value] : doc["components"].items())
    m.set_dim(key_to_mask(key, n), value.get<long>());
  if (doc.contains("mult")) {
    for (const auto& [key, value] : doc["mult"].items()) {
      const auto at = key.find('@');
      if (at == std::string::npos || at == 0)
        throw domain_error("bad mult key: " + key);
      const int v = std::stoi(key.substr(0, at));
      if (v < 1 || v > n) throw domain_error("bad mult variable: " + key);
      const unsigned r = key_to_mask(key.substr(at + 1), n);
      if ((r >> (v - 1)) & 1u)
        throw domain_error("mult variable already in degree: " + key);
      const unsigned rv = r | (1u << (v - 1));
      m.set_mult(v, r,
                 matrix_from_json(value, static_cast<std::size_t>(m.dim(rv)),
                                  static_cast<std::size_t>(m.dim(r))));
    }
  }
  // absent matrices between nonzero components are zero maps
  for (unsigned r = 0; r < m.degree_count(); ++r)
    for (int v = 1; v <= n; ++v) {
      if ((r >> (v - 1)) & 1u) continue;
      const unsigned rv = r | (1u << (v - 1));
      if (m.dim(r) > 0 && m.dim(rv) > 0 && m.mult(v, r).rows() == 0)
        m.set_mult(v, r, RatMatrix(static_cast<std::size_t>(m.dim(rv)),
                                   static_cast<std::size_t>(m.dim(r))));
    }
  const auto issues = m.validate();
  if (!issues.empty())
    throw domain_error("module file invalid: " + issues.front());
  return m;
}

void write_module(const SqModule& m, std::ostream& os) {
  os << module_to_string(m);
}

SqModule read_module(std::istream& is) {
  std::ostringstream buf;
  buf << is.rdbuf();
  return module_from_string(buf.str());
}

std::string complex_to_string(const FreeSqComplex& f) {
  json doc;
  doc["n"] = f.n();
  json terms = json::array();
  for (const auto& [p, gens] : f.terms()) {
    json t;
    t["position"] = p;
    json gen_list = json::array();
    for (const Generator& g : gens) {
      json bits = json::array();
      for (int v = 1; v <= f.n(); ++v)
        bits.push_back((g.mask >> (v - 1)) & 1u ? 1 : 0);
      gen_list.push_back(std::move(bits));
    }
    t["generators"] = std::move(gen_list);
    terms.push_back(std::move(t));
  }
  doc["terms"] = std::move(terms);
  json diffs = json::array();
  for (const auto& [p, gens] : f.terms()) {
    (void)gens;
    if (!f.has_diff(p)) continue;
    json d;
    d["from"] = p;
    d["entries"] = matrix_to_json(f.diff(p));
    diffs.push_back(std::move(d));
  }
  doc["diffs"] = std::move(diffs);
  return doc.dump(2) + "\n";
}

FreeSqComplex complex_from_string(const std::string& text) {
  const json doc = parse_document(text);
  if (!doc.contains("n") || !doc.contains("terms"))
    throw domain_error("complex file needs fields n and terms");
  const int n = doc["n"].get<int>();
  if (n < 0 || n > 24) throw domain_error("complex file n out of range");
  FreeSqComplex f(n);
  for (const json& t : doc["terms"]) {
    const int p = t.at("position").get<int>();
    std::vector<Generator> gens;
    for (const json& bits : t.at("generators")) {
      if (!bits.is_array() || bits.size() != static_cast<std::size_t>(n))
        throw domain_error("generator degree vector has wrong length");
      unsigned mask = 0;
      for (int v = 1; v <= n; ++v) {
        const int bit = bits[static_cast<std::size_t>(v - 1)].get<int>();
        if (bit != 0 && bit != 1)
          throw domain_error("generator degree vector must be 0/1");
        if (bit) mask |= 1u << (v - 1);
      }
      gens.push_back(Generator{mask});
    }
    if (f.has_term(p)) throw domain_error("duplicate term position");
    f.set_term(p, std::move(gens));
  }
  if (doc.contains("diffs")) {
    for (const json& d : doc["diffs"]) {
      const int p = d.at("from").get<int>();
      f.set_diff(p, matrix_from_json(d.at("entries"), f.term(p + 1).size(),
                                     f.term(p).size()));
    }
  }
  f.prune();
  return f;
}

void write_complex(const FreeSqComplex& f, std::ostream& os) {
  os << complex_to_string(f);
}

FreeSqComplex read_complex(std::istream& is) {
  std::ostringstream buf;
  buf << is.rdbuf();
  return complex_from_string(buf.str());
}

}  // namespace sqt
