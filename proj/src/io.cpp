#include "qmod/io.hpp"

#include <fstream>
#include <sstream>

namespace qmod {

namespace {

Cyclotomic scalar_from(const Json& j, int order) {
  if (j.is_string()) return Cyclotomic::parse(j.get<std::string>(), order);
  if (j.is_number_integer()) return Cyclotomic(order, j.get<long>());
  throw FormatError("scalar must be a string literal or an integer");
}

Vec vec_from(const Json& j, int n, int order, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw FormatError(std::string(what) + ": expected an array of length " + std::to_string(n));
  Vec v;
  for (const auto& x : j) v.push_back(scalar_from(x, order));
  return v;
}

Mat mat_from(const Json& j, int r, int c, int order, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != r)
    throw FormatError(std::string(what) + ": expected " + std::to_string(r) + " rows");
  Mat m;
  for (const auto& row : j) m.push_back(vec_from(row, c, order, what));
  return m;
}

Json mat_json(const Mat& m) {
  Json j = Json::array();
  for (const auto& row : m) j.push_back(vec_json(row));
  return j;
}

Json tensor3_json(const Tensor& t) {
  Json j = Json::array();
  for (const auto& [idx, c] : t.entries) j.push_back({idx[0], idx[1], idx[2], scalar_json(c)});
  return j;
}

Tensor tensor3_from(const Json& j, int n, int order, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + ": expected an array of triples");
  Tensor t({n, n, n}, order);
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 4) throw FormatError(std::string(what) + ": entries are [i, j, k, c]");
    std::vector<int> idx{e[0].get<int>(), e[1].get<int>(), e[2].get<int>()};
    for (int i : idx)
      if (i < 0 || i >= n) throw FormatError(std::string(what) + ": index out of range");
    t.add(idx, scalar_from(e[3], order));
  }
  return t;
}

Json svec2_json(const SVec& v, int d) {
  Json j = Json::array();
  for (const auto& [idx, c] : v) j.push_back({idx / d, idx % d, scalar_json(c)});
  return j;
}

SVec svec2_from(const Json& j, int d, int order, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + ": expected an array of [a, b, c]");
  SVec v;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 3) throw FormatError(std::string(what) + ": entries are [a, b, c]");
    int a = e[0].get<int>(), b = e[1].get<int>();
    if (a < 0 || a >= d || b < 0 || b >= d) throw FormatError(std::string(what) + ": index out of range");
    sadd(v, static_cast<std::int64_t>(a) * d + b, scalar_from(e[2], order));
  }
  return v;
}

}  // namespace

Json scalar_json(const Cyclotomic& c) { return c.to_string(); }

Json vec_json(const Vec& v) {
  Json j = Json::array();
  for (const auto& c : v) j.push_back(scalar_json(c));
  return j;
}

Json algebra_to_json(const Algebra& A) {
  const HopfAlgebra& H = A.H;
  Json j;
  if (!A.name.empty()) j["name"] = A.name;
  j["dim"] = H.dim;
  j["scalar_order"] = H.order();
  j["mult"] = tensor3_json(H.mult);
  j["comult"] = tensor3_json(H.comult);
  j["counit"] = vec_json(H.counit);
  j["unit"] = vec_json(H.unit);
  Json S = Json::array();
  for (const auto& row : H.antipode.rows()) S.push_back(vec_json(row));
  j["antipode"] = S;
  if (A.R) {
    j["R"] = svec2_json(A.R->R, H.dim);
    j["R_inv"] = svec2_json(A.R->R_inv, H.dim);
  }
  if (A.ribbon) {
    j["v"] = vec_json(A.ribbon->v);
    j["v_inv"] = vec_json(A.ribbon->v_inv);
  }
  if (!H.basis_names.empty()) j["basis_names"] = H.basis_names;
  if (!A.grouplikes.empty()) {
    Json g = Json::array();
    for (const auto& w : A.grouplikes) g.push_back(vec_json(w));
    j["grouplikes"] = g;
  }
  if (!A.reps.empty()) {
    Json reps = Json::array();
    for (const auto& r : A.reps) {
      Json mats = Json::array();
      for (const auto& m : r.mats) mats.push_back(mat_json(m));
      reps.push_back({{"name", r.name}, {"dim", r.dim_v}, {"mats", mats}});
    }
    j["reps"] = reps;
  }
  return j;
}

Algebra algebra_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("algebra file must be a JSON object");
  for (const char* k : {"dim", "scalar_order", "mult", "comult", "counit", "unit", "antipode"})
    if (!j.contains(k)) throw FormatError(std::string("missing field '") + k + "'");
  try {
    Algebra A;
    A.name = j.value("name", std::string("file"));
    HopfAlgebra& H = A.H;
    H.dim = j["dim"].get<int>();
    H.scalar_order = j["scalar_order"].get<int>();
    if (H.dim < 1) throw FormatError("dim must be positive");
    if (H.scalar_order < 1) throw FormatError("scalar_order must be positive");
    const int n = H.dim, N = H.scalar_order;
    H.mult = tensor3_from(j["mult"], n, N, "mult");
    H.comult = tensor3_from(j["comult"], n, N, "comult");
    H.counit = vec_from(j["counit"], n, N, "counit");
    H.unit = vec_from(j["unit"], n, N, "unit");
    H.antipode = LinearMap::from_rows(mat_from(j["antipode"], n, n, N, "antipode"), n, N);
    if (j.contains("basis_names")) {
      H.basis_names = j["basis_names"].get<std::vector<std::string>>();
      if (static_cast<int>(H.basis_names.size()) != n) throw FormatError("basis_names: wrong length");
    }
    H.finalize();
    if (j.contains("R")) {
      QuasitriangularData Q;
      Q.R = svec2_from(j["R"], n, N, "R");
      if (j.contains("R_inv")) {
        Q.R_inv = svec2_from(j["R_inv"], n, N, "R_inv");
      } else {
        auto inv = invert_element2(H, Q.R);
        if (!inv) throw FormatError("R is not invertible and no R_inv was given");
        Q.R_inv = *inv;
      }
      A.R = Q;
      A.R_unverified = true;
    }
    if (j.contains("grouplikes"))
      for (const auto& g : j["grouplikes"]) A.grouplikes.push_back(vec_from(g, n, N, "grouplikes"));
    if (j.contains("v")) {
      if (!A.R) throw FormatError("v given without R");
      RibbonData rb;
      rb.v = vec_from(j["v"], n, N, "v");
      if (j.contains("v_inv")) {
        rb.v_inv = vec_from(j["v_inv"], n, N, "v_inv");
      } else {
        auto inv = invert_element(H, rb.v);
        if (!inv) throw FormatError("v is not invertible and no v_inv was given");
        rb.v_inv = *inv;
      }
      rb.u = drinfeld_element(H, *A.R);
      rb.pivot = H.mul(rb.u, rb.v_inv);
      A.ribbon = rb;
    }
    A.pivot = A.ribbon ? std::optional<Vec>(A.ribbon->pivot) : find_pivotal(H, A.grouplikes);
    if (j.contains("reps"))
      for (const auto& r : j["reps"]) {
        Representation rep;
        rep.name = r.at("name").get<std::string>();
        rep.dim_v = r.at("dim").get<int>();
        const auto& mats = r.at("mats");
        if (!mats.is_array() || static_cast<int>(mats.size()) != n)
          throw FormatError("rep '" + rep.name + "': one matrix per basis element expected");
        for (const auto& m : mats) rep.mats.push_back(mat_from(m, rep.dim_v, rep.dim_v, N, "rep"));
        A.reps.push_back(rep);
      }
    return A;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed algebra file: ") + e.what());
  }
}

Algebra load_algebra(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw FormatError("cannot open '" + path + "'");
  Json j;
  try {
    j = Json::parse(is);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError("'" + path + "' is not valid JSON: " + e.what());
  }
  return algebra_from_json(j);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void save_algebra(const Algebra& A, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw FormatError("cannot write '" + path + "'");
  os << dump(algebra_to_json(A));
}

Json report_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    if (!c.witness.empty()) e["witness"] = c.witness;
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(e);
  }
  Json j;
  j["pass"] = r.pass();
  j["checks"] = checks;
  return j;
}

Json subspace_json(const Subspace& s, bool with_basis) {
  Json j;
  j["dim"] = s.dim();
  j["ambient"] = s.ambient();
  if (with_basis) {
    Json b = Json::array();
    for (const auto& v : s.basis()) b.push_back(vec_json(v));
    j["basis"] = b;
  }
  return j;
}

Json moduli_table_json(const Moduli& L) {
  Json j = Json::array();
  for (const auto& [a, b, k, c] : product_table(L)) j.push_back({a, b, k, scalar_json(c)});
  return j;
}

}  // namespace qmod
