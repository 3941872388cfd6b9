#include "moff/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace moff {

namespace {

using nlohmann::json;

json rational_to_json(const Rational& q) { return q.str(); }

Rational rational_from_json(const json& j) {
  if (!j.is_string()) throw IoError("expected rational as \"p/q\" string");
  return Rational::parse(j.get<std::string>());
}

json exact_matrix_to_json(const ExactMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      ExactComplex e = m.entry(i, j);
      row.push_back(json{{"im", e.im().str()}, {"re", e.re().str()}});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ExactMatrix exact_matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw IoError("expected matrix as array of rows");
  std::size_t rows = j.size();
  std::size_t cols = j.at(0).size();
  std::vector<ExactComplex> entries;
  entries.reserve(rows * cols);
  for (const auto& row : j) {
    if (row.size() != cols) throw IoError("ragged matrix rows");
    for (const auto& e : row)
      entries.emplace_back(rational_from_json(e.at("re")), rational_from_json(e.at("im")));
  }
  return ExactMatrix::from_entries(rows, cols, entries);
}

json float_matrix_to_json(const FloatMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(json::array({m.at(i, j).real(), m.at(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

FloatMatrix float_matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw IoError("expected matrix as array of rows");
  std::size_t rows = j.size();
  std::size_t cols = j.at(0).size();
  FloatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (j.at(i).size() != cols) throw IoError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& e = j.at(i).at(c);
      m.at(i, c) = {e.at(0).get<double>(), e.at(1).get<double>()};
    }
  }
  return m;
}

void require_format(const json& j) {
  if (!j.is_object() || j.value("format", "") != kFormatTag)
    throw IoError("missing or unsupported \"format\" field (want moff/1)");
}

std::string mode_name(bool exact) { return exact ? "exact" : "float"; }

bool mode_from_json(const json& j) {
  std::string m = j.value("mode", "");
  if (m == "exact") return true;
  if (m == "float") return false;
  throw IoError("missing or unsupported \"mode\" field");
}

json blocks_to_json(const BlockFamily& f) {
  json blocks = json::array();
  for (std::uint64_t b : f.blocks) {
    json elems = json::array();
    for (std::size_t e : block_elements(b)) elems.push_back(e);
    blocks.push_back(std::move(elems));
  }
  return blocks;
}

BlockFamily blocks_from_json(const json& j, std::size_t m, std::size_t l) {
  BlockFamily f;
  f.m = m;
  f.l = l;
  for (const auto& blk : j) {
    std::vector<std::size_t> elems;
    std::size_t prev = 0;
    for (const auto& e : blk) {
      std::size_t v = e.get<std::size_t>();
      if (v <= prev) throw IoError("block elements must be strictly increasing, 1-based");
      prev = v;
      elems.push_back(v);
    }
    if (elems.size() != l) throw IoError("block size differs from l");
    f.blocks.push_back(block_from_elements(elems, m));
  }
  return f;
}

}  // namespace

json basis_set_to_json(const BasisSet& s) {
  json j;
  j["format"] = kFormatTag;
  j["kind"] = "basis-set";
  j["mode"] = mode_name(s.exact);
  j["field"] = field_name(s.field);
  j["m"] = s.dim;
  json bases = json::array();
  if (s.exact) {
    for (const Basis& b : s.bases) {
      json jb;
      jb["scale"] = b.scale == Scale::inv_sqrt_dim ? "inv-sqrt-dim" : "none";
      jb["den"] = b.mat.den();
      // compact form: Gaussian-integer numerators [a, b] meaning a + bi
      json rows = json::array();
      for (std::size_t i = 0; i < b.mat.rows(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < b.mat.cols(); ++c)
          row.push_back(json::array({b.mat.raw(i, c).re, b.mat.raw(i, c).im}));
        rows.push_back(std::move(row));
      }
      jb["entries"] = std::move(rows);
      bases.push_back(std::move(jb));
    }
  } else {
    for (const FloatMatrix& b : s.fbases) {
      json jb;
      jb["scale"] = "none";
      jb["entries"] = float_matrix_to_json(b);
      bases.push_back(std::move(jb));
    }
  }
  j["bases"] = std::move(bases);
  return j;
}

BasisSet basis_set_from_json(const json& j) {
  require_format(j);
  BasisSet s;
  s.exact = mode_from_json(j);
  s.field = field_from_name(j.at("field").get<std::string>());
  s.dim = j.at("m").get<std::size_t>();
  for (const auto& jb : j.at("bases")) {
    std::string scale = jb.value("scale", "none");
    if (s.exact) {
      const auto& rows = jb.at("entries");
      std::size_t r = rows.size();
      if (r != s.dim) throw IoError("basis row count differs from m");
      ExactMatrix m(r, r);
      long long den = jb.value("den", 1LL);
      if (den <= 0) throw IoError("basis denominator must be positive");
      m.set_den(den);
      for (std::size_t i = 0; i < r; ++i) {
        if (rows.at(i).size() != r) throw IoError("basis must be square");
        for (std::size_t c = 0; c < r; ++c) {
          const auto& e = rows.at(i).at(c);
          m.raw(i, c) = {e.at(0).get<long long>(), e.at(1).get<long long>()};
        }
      }
      Basis b;
      b.mat = std::move(m);
      b.scale = scale == "inv-sqrt-dim" ? Scale::inv_sqrt_dim : Scale::none;
      s.bases.push_back(std::move(b));
    } else {
      if (scale != "none") throw IoError("float bases must carry unit columns (scale none)");
      FloatMatrix m = float_matrix_from_json(jb.at("entries"));
      if (m.rows() != s.dim || m.cols() != s.dim) throw IoError("basis shape differs from m");
      s.fbases.push_back(std::move(m));
    }
  }
  return s;
}

json design_to_json(const BlockFamily& f) {
  json j;
  j["format"] = kFormatTag;
  j["kind"] = "design";
  j["m"] = f.m;
  j["l"] = f.l;
  j["blocks"] = blocks_to_json(f);
  return j;
}

BlockFamily design_from_json(const json& j) {
  require_format(j);
  std::size_t m = j.at("m").get<std::size_t>();
  std::size_t l = j.at("l").get<std::size_t>();
  if (m == 0 || m > 64 || l == 0 || l > m) throw IoError("need 0 < l <= m <= 64");
  return blocks_from_json(j.at("blocks"), m, l);
}

json frame_to_json(const FusionFrame& ff) {
  json j;
  j["format"] = kFormatTag;
  j["kind"] = "frame";
  j["mode"] = mode_name(ff.exact);
  j["field"] = field_name(ff.field);
  j["m"] = ff.m;
  j["l"] = ff.l;
  json projs = json::array();
  if (ff.exact)
    for (const ExactMatrix& p : ff.projections) projs.push_back(exact_matrix_to_json(p));
  else
    for (const FloatMatrix& p : ff.fprojections) projs.push_back(float_matrix_to_json(p));
  j["projections"] = std::move(projs);
  if (!ff.provenance.empty()) {
    json prov = json::array();
    for (const Provenance& p : ff.provenance) {
      json elems = json::array();
      for (std::size_t e : block_elements(p.block)) elems.push_back(e);
      prov.push_back(json{{"basis", p.basis_index}, {"block", std::move(elems)}});
    }
    j["provenance"] = std::move(prov);
  }
  return j;
}

FusionFrame frame_from_json(const json& j) {
  require_format(j);
  FusionFrame ff;
  ff.exact = mode_from_json(j);
  ff.field = field_from_name(j.at("field").get<std::string>());
  ff.m = j.at("m").get<std::size_t>();
  ff.l = j.at("l").get<std::size_t>();
  for (const auto& jp : j.at("projections")) {
    if (ff.exact) {
      ExactMatrix p = exact_matrix_from_json(jp);
      if (p.rows() != ff.m || p.cols() != ff.m) throw IoError("projection shape differs from m");
      ff.projections.push_back(std::move(p));
    } else {
      FloatMatrix p = float_matrix_from_json(jp);
      if (p.rows() != ff.m || p.cols() != ff.m) throw IoError("projection shape differs from m");
      ff.fprojections.push_back(std::move(p));
    }
  }
  if (ff.size() == 0) throw IoError("frame has no projections");
  if (j.contains("provenance")) {
    for (const auto& jp : j.at("provenance")) {
      Provenance p;
      p.basis_index = jp.at("basis").get<std::size_t>();
      std::vector<std::size_t> elems;
      for (const auto& e : jp.at("block")) elems.push_back(e.get<std::size_t>());
      p.block = block_from_elements(elems, ff.m);
      ff.provenance.push_back(p);
    }
    if (ff.provenance.size() != ff.size())
      throw IoError("provenance length differs from projection count");
  }
  return ff;
}

json certificate_to_json(const Certificate& c, const std::string& input_digest) {
  json j;
  j["format"] = kFormatTag;
  j["kind"] = "certificate";
  j["tool_version"] = kToolVersion;
  j["input_digest"] = input_digest;
  j["mode"] = mode_name(c.exact);
  j["tol"] = c.tol;
  j["field"] = field_name(c.field);
  j["n"] = c.n;
  j["l"] = c.l;
  j["m"] = c.m;
  j["frame_lower"] = c.frame_lower;
  j["frame_upper"] = c.frame_upper;
  j["is_tight"] = c.is_tight;
  if (c.is_tight && c.exact) j["tight_value"] = rational_to_json(c.tight_value);
  if (c.exact) j["max_cross"] = rational_to_json(c.max_cross_q);
  else j["max_cross"] = c.max_cross;
  j["simplex_bound"] = rational_to_json(c.simplex_bound);
  j["orthoplex_bound"] = rational_to_json(c.orthoplex_bound);
  j["regime"] = c.regime == Certificate::Regime::orthoplex ? "orthoplex" : "simplex";
  j["is_equiangular"] = c.is_equiangular;
  j["is_orthoplex_achieving"] = c.is_orthoplex_achieving;
  j["is_maximal_orthoplectic"] = c.is_maximal_orthoplectic;
  j["half_dimension_ok"] = c.half_dimension_ok;
  j["partner"] = c.partner;
  if (c.exact) {
    j["sidelnikov_lhs"] = rational_to_json(c.sidelnikov_lhs_q);
    j["sidelnikov_rhs"] = rational_to_json(c.sidelnikov_rhs_q);
  } else {
    j["sidelnikov_lhs"] = c.sidelnikov_lhs;
    j["sidelnikov_rhs"] = c.sidelnikov_rhs;
  }
  j["sidelnikov_equal"] = c.sidelnikov_equal;
  if (c.design_params) {
    j["design_params"] = json{{"t", c.design_params->t},
                              {"m", c.design_params->m},
                              {"l", c.design_params->l},
                              {"lambda", c.design_params->lambda}};
  }
  return j;
}

void save_json(const std::string& path, const json& j) {
  save_text(path, j.dump(2) + "\n");
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw IoError(path + ": " + e.what());
  }
  return j;
}

std::string incidence_to_csv(const IncidenceMatrix& s) {
  std::ostringstream out;
  for (std::size_t i = 0; i < s.m; ++i) {
    for (std::size_t j = 0; j < s.n; ++j) {
      if (j) out << ',';
      out << int(s.at(i, j));
    }
    out << '\n';
  }
  return out.str();
}

std::string cross_gramian_to_csv(const CrossGramian& g) {
  std::ostringstream out;
  for (std::size_t i = 0; i < g.n; ++i) {
    for (std::size_t j = 0; j < g.n; ++j) {
      if (j) out << ',';
      if (g.exact) out << g.qat(i, j).str();
      else out << g.d[i * g.n + j];
    }
    out << '\n';
  }
  return out.str();
}

void save_text(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << body;
  if (!out) throw IoError("write failed: " + path);
}

std::string bytes_digest(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return bytes_digest(ss.str());
}

}  // namespace moff
