#include "qmod/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "qmod/io.hpp"
#include "qmod/wilson.hpp"

namespace qmod {

namespace {

struct InputError : Error {
  using Error::Error;
};

struct Options {
  std::string file, out, variant = "general", word, color, table = "moduli", rep;
  int g = 0, n = 0, threads = 1, samples = 200;
  unsigned seed = 1;
  bool assoc = false, matrix = false, morphism = false, rank = false;
};

// "builtin:<name>" selects a built-in algebra instead of a file
Algebra load(const std::string& path) {
  const std::string pre = "builtin:";
  if (path.rfind(pre, 0) == 0) return builtin(path.substr(pre.size()));
  return load_algebra(path);
}

Json algebra_summary(const Algebra& A) {
  Json j;
  j["name"] = A.name;
  j["dim"] = A.H.dim;
  j["scalar_order"] = A.H.order();
  j["has_R"] = static_cast<bool>(A.R);
  j["has_ribbon"] = static_cast<bool>(A.ribbon);
  return j;
}

Json sig_json(Signature s) { return Json{{"g", s.g}, {"n", s.n}}; }

// the R-matrix is checked before anything is built from it
bool require_R(const Algebra& A, Json& j) {
  if (!A.R) throw MissingRMatrix(A.name + " carries no R-matrix");
  Report r = verify_quasitriangular(A.H, *A.R);
  if (r.pass()) return true;
  j["quasitriangular"] = report_json(r);
  j["pass"] = false;
  return false;
}

Signature signature(const Options& o) {
  if (o.g < 0 || o.n < 0 || 2 * o.g + o.n < 1) throw InputError("need g, n >= 0 and 2g+n >= 1");
  return {o.g, o.n};
}

int verb_verify(const Options& o, Json& j) {
  Algebra A = load(o.file);
  j["algebra"] = algebra_summary(A);
  bool ok = true;
  Report h = verify_hopf(A.H);
  j["hopf"] = report_json(h);
  ok = ok && h.pass();
  if (A.R) {
    Report q = verify_quasitriangular(A.H, *A.R);
    j["quasitriangular"] = report_json(q);
    ok = ok && q.pass();
    if (A.ribbon) {
      Report r = verify_ribbon(A.H, *A.R, *A.ribbon);
      j["ribbon"] = report_json(r);
      ok = ok && r.pass();
    }
  }
  Json reps = Json::object();
  for (const auto& rep : A.reps) {
    Report r = verify_representation(A.H, rep);
    reps[rep.name] = report_json(r);
    ok = ok && r.pass();
  }
  if (!A.reps.empty()) j["representations"] = reps;
  j["pass"] = ok;
  return ok ? exit_ok : exit_failed;
}

int verb_double(const Options& o, Json& j, std::ostream& err) {
  if (o.out.empty()) throw InputError("double needs --out");
  Algebra A = load(o.file);
  Report h = verify_hopf(A.H);
  if (!h.pass()) {
    j["hopf"] = report_json(h);
    j["pass"] = false;
    return exit_failed;
  }
  err << "building the double of " << A.name << "\n";
  Algebra D = drinfeld_double_of(A);
  save_algebra(D, o.out);
  j["algebra"] = algebra_summary(D);
  Report q = verify_quasitriangular(D.H, *D.R);
  j["quasitriangular"] = report_json(q);
  j["out"] = o.out;
  j["pass"] = q.pass();
  return q.pass() ? exit_ok : exit_failed;
}

int verb_moduli(const Options& o, Json& j, std::ostream& err) {
  Algebra A = load(o.file);
  Signature s = signature(o);
  j["algebra"] = algebra_summary(A);
  j["signature"] = sig_json(s);
  if (!require_R(A, j)) return exit_failed;
  bool ok = true;
  err << "building product tables\n";
  Moduli L = make_moduli(A, s);
  j["dim"] = L.dim();
  if (o.assoc) {
    const bool exhaustive = L.dim() <= 64;
    err << (exhaustive ? "checking all basis triples\n" : "checking random basis triples\n");
    Report r = check_associativity(L, exhaustive ? std::nullopt : std::optional<int>(o.samples), o.seed);
    j["associativity"] = report_json(r);
    ok = ok && r.pass();
  }
  if (o.matrix) {
    std::vector<Representation> st;
    const Representation* V = find_color(A, o.rep.empty() ? "regular" : o.rep, st);
    if (!V) throw InputError("unknown representation '" + o.rep + "'");
    Report r = check_matrix_relations(L, *V, *V);
    j["representation"] = V->name;
    j["matrix_relations"] = report_json(r);
    ok = ok && r.pass();
  }
  j["pass"] = ok;
  return ok ? exit_ok : exit_failed;
}

int verb_invariants(const Options& o, Json& j, std::ostream& err) {
  Algebra A = load(o.file);
  Signature s = signature(o);
  j["algebra"] = algebra_summary(A);
  j["signature"] = sig_json(s);
  if (!require_R(A, j)) return exit_failed;
  Moduli L = make_moduli(A, s);
  err << "solving for invariants in dimension " << L.dim() << "\n";
  Subspace inv = invariants(L);
  j["dim"] = L.dim();
  j["invariants"] = subspace_json(inv, L.dim() <= 64);
  // product closure and unit
  bool closed = inv.contains(L.to_dense(L.unit()));
  for (size_t a = 0; a < inv.basis().size() && closed; ++a)
    for (size_t b = 0; b < inv.basis().size() && closed; ++b)
      closed = inv.contains(L.to_dense(L.mul(to_sparse(inv.basis()[a]), to_sparse(inv.basis()[b]))));
  j["subalgebra"] = closed;
  j["pass"] = closed;
  return closed ? exit_ok : exit_failed;
}

int verb_alekseev(const Options& o, Json& j, std::ostream& err) {
  Algebra A = load(o.file);
  Signature s = signature(o);
  if (o.variant != "general" && o.variant != "findim") throw InputError("--variant is general or findim");
  const Variant v = o.variant == "general" ? Variant::general : Variant::findim;
  j["algebra"] = algebra_summary(A);
  j["signature"] = sig_json(s);
  j["variant"] = o.variant;
  if (!require_R(A, j)) return exit_failed;
  bool ok = true;
  Moduli L = make_moduli(A, s);
  AlekseevMap phi(L, v);
  j["dim"] = L.dim();
  j["target_dim"] = phi.target().dim();
  Report p01 = check_phi01(A.H, *A.R);
  j["phi01"] = report_json(p01);
  ok = ok && p01.pass();
  if (o.rank) {
    err << "rank of Phi_{g,n}\n";
    InjectivityReport r = injectivity_report(L, v);
    j["rank"] = r.rank;
    j["injective"] = r.injective;
  }
  if (o.morphism) {
    const bool exhaustive = L.dim() <= 64;
    err << "checking multiplicativity\n";
    Report r = check_phign_morphism(L, v, exhaustive ? std::nullopt : std::optional<int>(o.samples), o.seed);
    j["morphism"] = report_json(r);
    ok = ok && r.pass();
    if (exhaustive) {
      Report c = check_dgn_commutation(L, v);
      j["dgn_commutation"] = report_json(c);
      ok = ok && c.pass();
      Report a = check_variants_agree(L);
      j["variants"] = report_json(a);
      ok = ok && a.pass();
    }
  }
  j["pass"] = ok;
  return ok ? exit_ok : exit_failed;
}

int verb_reduce(const Options& o, Json& j, std::ostream& err) {
  Algebra A = load(o.file);
  Signature s = signature(o);
  j["algebra"] = algebra_summary(A);
  j["signature"] = sig_json(s);
  if (!require_R(A, j)) return exit_failed;
  Moduli L = make_moduli(A, s);
  MomentMap m(L, A.ribbon);
  j["moment_subalgebra"] = report_json(m.subalgebra().checks);
  err << "checking the moment map\n";
  Report q = check_qmm(m, L.dim() <= 64 ? std::nullopt : std::optional<int>(o.samples), o.seed);
  j["qmm"] = report_json(q);
  err << "computing the reduction\n";
  QuantumReduction r = quantum_reduction(m);
  Json d;
  d["L"] = r.dim_L;
  d["invariants"] = r.dim_invariants;
  d["ideal"] = r.dim_ideal;
  d["reduced"] = r.dim_reduced;
  d["ker_pi"] = r.dim_kernel;
  j["dims"] = d;
  j["rank_pi"] = r.rank_pi;
  j["surjective"] = r.surjective;
  j["well_defined"] = r.well_defined;
  j["semisimple"] = r.semisimple;
  if (r.kernel_is_reynolds_image) j["ker_pi_is_reynolds_image"] = *r.kernel_is_reynolds_image;
  j["failed_hypotheses"] = r.failed_hypotheses;
  const bool ok = q.pass() && m.subalgebra().checks.pass() && r.well_defined && r.closed;
  j["pass"] = ok;
  return ok ? exit_ok : exit_failed;
}

int verb_wilson(const Options& o, Json& j) {
  Algebra A = load(o.file);
  Signature s = signature(o);
  j["algebra"] = algebra_summary(A);
  j["signature"] = sig_json(s);
  if (!require_R(A, j)) return exit_failed;
  Moduli L = make_moduli(A, s);
  LoopWord w = parse_word(o.word);
  std::vector<Representation> st;
  const Representation* V = find_color(A, o.color.empty() ? "regular" : o.color, st);
  if (!V) throw InputError("unknown color '" + o.color + "'");
  SVec W = wilson_loop(L, A, w, *V);
  j["word"] = format_word(w);
  j["color"] = V->name;
  Json coeffs = Json::array();
  for (const auto& [k, c] : W) coeffs.push_back({k, scalar_json(c)});
  j["loop"] = coeffs;
  const bool inv = is_invariant(L, W);
  j["invariant"] = inv;
  j["pass"] = inv;
  return inv ? exit_ok : exit_failed;
}

int verb_export(const Options& o, Json& j, std::ostream& err) {
  if (o.table != "moduli") throw InputError("only --table moduli is supported");
  if (o.out.empty()) throw InputError("export needs --out");
  Algebra A = load(o.file);
  Signature s = signature(o);
  if (!require_R(A, j)) return exit_failed;
  Moduli L = make_moduli(A, s);
  err << "exporting " << L.dim() << "^2 basis products\n";
  std::ofstream os(o.out);
  if (!os) throw InputError("cannot write '" + o.out + "'");
  Json t = moduli_table_json(L);
  os << t.dump() << "\n";
  j["algebra"] = algebra_summary(A);
  j["signature"] = sig_json(s);
  j["dim"] = L.dim();
  j["entries"] = t.size();
  j["out"] = o.out;
  j["pass"] = true;
  return exit_ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"qmoduli: exact computations in quantum moduli algebras"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--threads", o.threads, "worker bound (computation is sequential)")->check(CLI::PositiveNumber);

  auto sig_opts = [&](CLI::App* c) {
    c->add_option("--g", o.g, "genus")->required();
    c->add_option("--n", o.n, "punctures")->required();
  };
  auto common = [&](CLI::App* c) {
    c->add_option("file", o.file, "algebra JSON or builtin:<name>")->required();
    c->add_option("--threads", o.threads)->check(CLI::PositiveNumber);
  };
  auto* verify = app.add_subcommand("verify", "check the Hopf, R-matrix, ribbon and representation axioms");
  common(verify);
  auto* dbl = app.add_subcommand("double", "write the Drinfeld double");
  common(dbl);
  dbl->add_option("--out", o.out)->required();
  auto* mod = app.add_subcommand("moduli", "build L_{g,n}(H) and check it");
  common(mod);
  sig_opts(mod);
  mod->add_flag("--check-associativity", o.assoc);
  mod->add_flag("--check-matrix-relations", o.matrix);
  mod->add_option("--rep", o.rep, "representation for the matrix relations (default regular)");
  mod->add_option("--samples", o.samples)->check(CLI::PositiveNumber);
  mod->add_option("--seed", o.seed);
  auto* inv = app.add_subcommand("invariants", "coad-invariant subalgebra");
  common(inv);
  sig_opts(inv);
  auto* ale = app.add_subcommand("alekseev", "the Alekseev morphism");
  common(ale);
  sig_opts(ale);
  ale->add_option("--variant", o.variant)->check(CLI::IsMember({"general", "findim"}));
  ale->add_flag("--check-morphism", o.morphism);
  ale->add_flag("--rank", o.rank);
  ale->add_option("--samples", o.samples)->check(CLI::PositiveNumber);
  ale->add_option("--seed", o.seed);
  auto* red = app.add_subcommand("reduce", "moment map and quantum reduction at eps");
  common(red);
  sig_opts(red);
  red->add_option("--samples", o.samples)->check(CLI::PositiveNumber);
  red->add_option("--seed", o.seed);
  auto* wil = app.add_subcommand("wilson", "Wilson loop of a word");
  common(wil);
  sig_opts(wil);
  wil->add_option("--word", o.word)->required();
  wil->add_option("--color", o.color);
  auto* exp = app.add_subcommand("export", "export a multiplication table");
  common(exp);
  sig_opts(exp);
  exp->add_option("--table", o.table)->required();
  exp->add_option("--out", o.out)->required();

  Json j;
  auto fail_input = [&](const std::string& kind, const std::string& msg) {
    err << "error: " << msg << "\n";
    Json e;
    e["error"] = kind;
    e["message"] = msg;
    out << dump(e);
    return exit_input;
  };
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    err << app.help();
    out << dump(Json{{"help", true}});
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    return fail_input("usage", e.what());
  }
  CLI::App* sub = app.get_subcommands().front();
  j["verb"] = sub->get_name();
  int code = exit_ok;
  try {
    const std::string v = sub->get_name();
    if (v == "verify") code = verb_verify(o, j);
    else if (v == "double") code = verb_double(o, j, err);
    else if (v == "moduli") code = verb_moduli(o, j, err);
    else if (v == "invariants") code = verb_invariants(o, j, err);
    else if (v == "alekseev") code = verb_alekseev(o, j, err);
    else if (v == "reduce") code = verb_reduce(o, j, err);
    else if (v == "wilson") code = verb_wilson(o, j);
    else code = verb_export(o, j, err);
  } catch (const FormatError& e) {
    return fail_input("format", e.what());
  } catch (const ParseError& e) {
    return fail_input("parse", e.what());
  } catch (const UnknownBuiltin& e) {
    return fail_input("unknown_builtin", e.what());
  } catch (const BadParams& e) {
    return fail_input("bad_params", e.what());
  } catch (const InputError& e) {
    return fail_input("input", e.what());
  } catch (const BadSlot& e) {
    return fail_input("bad_slot", e.what());
  } catch (const BadIndex& e) {
    return fail_input("bad_index", e.what());
  } catch (const MissingRMatrix& e) {
    return fail_input("missing_R", e.what());
  } catch (const MissingRibbon& e) {
    return fail_input("missing_ribbon", e.what());
  } catch (const NotInjective& e) {
    return fail_input("not_injective", e.what());
  } catch (const OrderMismatch& e) {
    return fail_input("order_mismatch", e.what());
  } catch (const Error& e) {
    j["error"] = "computation";
    j["message"] = e.what();
    j["pass"] = false;
    err << "error: " << e.what() << "\n";
    code = exit_failed;
  }
  out << dump(j);
  return code;
}

}  // namespace qmod
