// e2q: command-line front end. Every subcommand prints one JSON document on
// stdout. Exit codes: 0 success, 1 domain error (invalid module, relation
// violation, failed precondition), 2 usage error or malformed input.

#include "e2q/e2q.hpp"
#include "e2q/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

namespace {

using e2q::io::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json parse_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError("malformed JSON in " + what + ": " + e.what());
  }
}

json read_document(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return parse_text(text, path == "-" ? "standard input" : path);
}

bool looks_like_module(const json& j) { return j.is_object() && (j.contains("p_plus") || j.contains("p_minus")); }

/// Accepts either encoding; e(2)-modules are carried over by to_quiver.
e2q::QuiverRep load_rep(const std::string& path) {
  const json j = read_document(path);
  if (looks_like_module(j)) {
    const auto m = e2q::io::module_from_json(j);
    if (const auto v = e2q::validate(m); !v.empty()) throw DomainError("invalid module: " + v.front().detail);
    return e2q::to_quiver(m);
  }
  return e2q::io::rep_from_json(j);
}

std::string verdict_name(e2q::Decomposability d) {
  switch (d) {
    case e2q::Decomposability::indecomposable: return "indecomposable";
    case e2q::Decomposability::decomposable: return "decomposable";
    case e2q::Decomposability::unresolved: return "unresolved";
  }
  return "unknown";
}

json iso_to_json(bool verdict, e2q::IsoMethod method, const std::optional<e2q::GradedMap>& witness,
                 const char* key) {
  json out{{key, verdict}, {"method", e2q::to_string(method)}};
  out["witness"] = witness ? e2q::io::graded_map_to_json(*witness) : json(nullptr);
  return out;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with e(2)-modules and preprojective-algebra modules"};
  app.require_subcommand(1);

  std::vector<std::string> modules;
  std::string partition_text, v_text, w_text, word_text, vector_text, weights_text;
  int weight = 0;
  std::vector<int> window;
  std::uint64_t seed = 0;
  bool exhaustive = false, include_decomposables = false;

  auto module_opt = [&](CLI::App* sub, std::size_t count) {
    auto* o = sub->add_option("--module", modules, "JSON file, or - for standard input")->required();
    if (count == 1) o->expected(1);
    return o;
  };
  auto random_opts = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "seed for randomized checks")->default_val(0);
    sub->add_flag("--exhaustive", exhaustive, "deterministic grid search instead of Monte Carlo");
  };

  auto* verify = app.add_subcommand("verify", "check module relations");
  module_opt(verify, 1);
  auto* to_quiver = app.add_subcommand("to-quiver", "e(2)-module to preprojective representation");
  module_opt(to_quiver, 1);
  auto* from_quiver = app.add_subcommand("from-quiver", "preprojective representation to e(2)-module");
  module_opt(from_quiver, 1);
  auto* shift = app.add_subcommand("shift", "tensor an e(2)-module with the character chi_n");
  module_opt(shift, 1);
  shift->add_option("--weight", weight, "shift n")->required();
  auto* young = app.add_subcommand("young", "single-generator module of a partition");
  young->add_option("--partition", partition_text, "e.g. [2,1]")->required();
  young->add_option("--weight", weight, "weight of the generator")->default_val(0);
  auto* residue = app.add_subcommand("residue-dims", "residue dimension vector of a partition");
  residue->add_option("--partition", partition_text)->required();
  residue->add_option("--weight", weight)->default_val(0);
  auto* thin = app.add_subcommand("enumerate-thin", "orbit representatives of thin indecomposables");
  thin->add_option("--window", window, "a b")->expected(2)->required();
  thin->add_flag("--include-decomposables", include_decomposables);
  auto* stable = app.add_subcommand("stable", "stability of a framed point");
  module_opt(stable, 1);
  auto* dim_formula = app.add_subcommand("dim-formula", "Nakajima variety dimension formula");
  dim_formula->add_option("--v", v_text)->required();
  dim_formula->add_option("--w", w_text)->required();
  auto* iso = app.add_subcommand("iso", "isomorphism test");
  module_opt(iso, 2);
  random_opts(iso);
  auto* framed_iso = app.add_subcommand("framed-iso", "equivalence of framed points");
  module_opt(framed_iso, 2);
  random_opts(framed_iso);
  auto* decompose = app.add_subcommand("decompose", "split into indecomposable summands");
  module_opt(decompose, 1);
  auto* end_alg = app.add_subcommand("end-algebra", "endomorphism algebra and indecomposability");
  module_opt(end_alg, 1);
  auto* apply = app.add_subcommand("apply-word", "act by a word of the modified enveloping algebra");
  module_opt(apply, 1);
  apply->add_option("--word", word_text, "e.g. [\"Proj:3\",\"P+\"]")->required();
  apply->add_option("--vector", vector_text, "graded vector, e.g. {\"0\":[\"1\"]}")->required();
  auto* runs = app.add_subcommand("weight-runs", "maximal runs of consecutive weights");
  runs->add_option("--weights", weights_text, "e.g. [0,1,2,5,6]")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  namespace io = e2q::io;
  try {
    const bool pair_input = iso->parsed() || framed_iso->parsed();
    if (!modules.empty() && modules.size() != (pair_input ? 2U : 1U))
      throw UsageError(pair_input ? "expected exactly two --module inputs" : "expected exactly one --module input");
    if (verify->parsed()) {
      const json j = read_document(modules.front());
      json out;
      bool ok = false;
      if (looks_like_module(j)) {
        const auto violations = e2q::validate(io::module_from_json(j));
        out["violations"] = json::array();
        for (const auto& v : violations)
          out["violations"].push_back({{"weight", v.weight}, {"kind", v.kind}, {"detail", v.detail}});
        ok = violations.empty();
      } else {
        const auto x = io::rep_from_json(j);
        const auto bad = e2q::check_relations(x);
        out["violations"] = bad;
        out["nilpotent"] = e2q::is_nilpotent(x);
        ok = bad.empty();
      }
      out["valid"] = ok;
      emit(out);
      return ok ? 0 : 1;
    }
    if (to_quiver->parsed()) {
      const auto m = io::module_from_json(read_document(modules.front()));
      if (const auto v = e2q::validate(m); !v.empty()) throw DomainError("invalid module: " + v.front().detail);
      emit(io::rep_to_json(e2q::to_quiver(m)));
    } else if (from_quiver->parsed()) {
      const auto x = io::rep_from_json(read_document(modules.front()));
      if (const auto bad = e2q::check_relations(x); !bad.empty())
        throw DomainError("relation violated at vertex " + std::to_string(bad.front()));
      emit(io::module_to_json(e2q::from_quiver(x)));
    } else if (shift->parsed()) {
      const auto m = io::module_from_json(read_document(modules.front()));
      if (const auto v = e2q::validate(m); !v.empty()) throw DomainError("invalid module: " + v.front().detail);
      emit(io::module_to_json(e2q::char_shift(m, weight)));
    } else if (young->parsed()) {
      const auto lambda = io::partition_from_json(parse_text(partition_text, "--partition"));
      if (lambda.empty()) throw DomainError("young module of the empty partition");
      const auto g = e2q::young_module(lambda, weight);
      json out = io::module_to_json(g.module);
      out["partition"] = io::partition_to_json(lambda);
      out["generators"] = json::array();
      for (const auto& [k, vec] : g.generators)
        out["generators"].push_back({{"weight", k}, {"vector", io::vector_to_json(vec)}});
      emit(out);
    } else if (residue->parsed()) {
      const auto lambda = io::partition_from_json(parse_text(partition_text, "--partition"));
      emit({{"dims", io::dims_to_json(e2q::residue_dim_vector(lambda, weight))}});
    } else if (thin->parsed()) {
      if (window[0] > window[1]) throw UsageError("--window a b needs a <= b");
      if (window[1] - window[0] > 20) throw UsageError("--window wider than 20 arrows");
      const auto result = e2q::enumerate_thin_indecomposables({window[0], window[1]}, include_decomposables);
      json out = json::array();
      for (const auto* bucket : {&result.indecomposables, &result.decomposables})
        for (const auto& x : *bucket) {
          json r = io::rep_to_json(x);
          r["indecomposable"] = e2q::is_indecomposable(x).kind == e2q::Decomposability::indecomposable;
          r["nilpotent"] = e2q::is_nilpotent(x);
          out.push_back(r);
        }
      emit(out);
    } else if (stable->parsed()) {
      emit({{"stable", e2q::is_stable(io::framed_from_json(read_document(modules.front())))}});
    } else if (dim_formula->parsed()) {
      const auto v = io::dims_from_json(parse_text(v_text, "--v"));
      const auto w = io::dims_from_json(parse_text(w_text, "--w"));
      const auto d = e2q::nakajima_dim(v, w);
      emit({{"dim", d}, {"empty", d < 0}});
    } else if (iso->parsed()) {
      const auto x = load_rep(modules.at(0)), y = load_rep(modules.at(1));
      const auto r = e2q::is_isomorphic(x, y, {seed, 20, exhaustive});
      emit(iso_to_json(r.isomorphic, r.method, r.witness, "isomorphic"));
    } else if (framed_iso->parsed()) {
      const auto p = io::framed_from_json(read_document(modules.at(0)));
      const auto q = io::framed_from_json(read_document(modules.at(1)));
      if (!(p.rep.dims() == q.rep.dims()) || !(p.framing_dims == q.framing_dims)) {
        emit(iso_to_json(false, e2q::IsoMethod::dimension_mismatch, std::nullopt, "equivalent"));
      } else {
        const auto r = e2q::framed_equivalent(p, q, {seed, 20, exhaustive});
        emit(iso_to_json(r.equivalent, r.method, r.witness, "equivalent"));
      }
    } else if (decompose->parsed()) {
      const auto x = load_rep(modules.front());
      if (x.total_dim() == 0) throw DomainError("zero representation");
      json parts = json::array();
      for (const auto& part : e2q::decompose(x)) {
        json r = io::rep_to_json(part);
        r["verdict"] = verdict_name(e2q::is_indecomposable(part).kind);
        parts.push_back(r);
      }
      emit({{"parts", parts}});
    } else if (end_alg->parsed()) {
      const auto x = load_rep(modules.front());
      if (x.total_dim() == 0) throw DomainError("zero representation");
      const auto end = e2q::end_algebra(x);
      const auto verdict = e2q::is_indecomposable(x);
      json out{{"dimension", end.dimension()},
               {"radical_dim", end.radical_dim},
               {"semisimple_quotient_dim", end.semisimple_quotient_dim},
               {"verdict", verdict_name(verdict.kind)}};
      out["idempotent"] = verdict.idempotent ? io::graded_map_to_json(*verdict.idempotent) : json(nullptr);
      emit(out);
    } else if (apply->parsed()) {
      const auto m = io::module_from_json(read_document(modules.front()));
      if (const auto v = e2q::validate(m); !v.empty()) throw DomainError("invalid module: " + v.front().detail);
      const auto word = io::word_from_json(parse_text(word_text, "--word"));
      const auto vec = io::graded_vector_from_json(parse_text(vector_text, "--vector"));
      for (const auto& [k, x] : vec)
        if (x.size() != m.dims[k]) throw DomainError("vector component at weight " + std::to_string(k) + " has wrong length");
      emit({{"result", io::graded_vector_to_json(e2q::apply_word(m, word, vec))}});
    } else if (runs->parsed()) {
      const auto r = e2q::weight_runs(io::weight_set_from_json(parse_text(weights_text, "--weights")));
      json list = json::array();
      for (const auto& [a, b] : r.runs) list.push_back({a, b});
      emit({{"runs", list}, {"finite_type_guaranteed", r.finite_type_guaranteed}});
    }
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const io::FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    emit({{"error", e.what()}});
    return 1;
  }
}
