// Command-line front end: validation, reduction, group calculator, random
// loop generation and confluence fuzzing, one JSON document per invocation.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "thinpl/errors.hpp"
#include "thinpl/io.hpp"
#include "thinpl/random_walk.hpp"
#include "thinpl/thin_bundle.hpp"
#include "thinpl/thin_group.hpp"

namespace {

using nlohmann::json;
using namespace thinpl;

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

ThinClass load_class(const std::string& path,
                     const std::shared_ptr<const SimplicialComplex>& complex) {
  return core(load_word(path, complex));
}

json trivial_flag(const PLWord& reduced) { return reduced.size() == 1; }

// Deterministic source of fuzz words: resample until the word fits the
// length budget (a constant loop always does, so this terminates).
PLWord bounded_random_loop(const std::shared_ptr<const SimplicialComplex>& complex,
                           SplitMix64& rng, std::size_t max_len, unsigned denom) {
  const std::size_t step_bound = max_len > 3 ? max_len - 3 : 1;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const std::size_t steps = rng.below(step_bound + 1);
    PLWord w = random_loop(complex, steps, rng, denom);
    if (w.size() <= max_len) return w;
  }
  return random_loop(complex, 0, rng, denom);
}

struct Args {
  std::string complex_path;
  std::string word_a;
  std::string word_b;
  long exponent = 0;
  bool as_path = false;
  bool with_trace = false;
  std::size_t steps = 0;
  std::uint64_t seed = 0;
  unsigned denom = 8;
  std::size_t max_len = 8;
  std::size_t trials = 100;
};

int dispatch(const CLI::App& app, const Args& a) {
  if (app.got_subcommand("validate")) {
    auto complex = load_complex(a.complex_path);
    emit(json{{"valid", true},
              {"ambient_dim", complex->ambient_dim()},
              {"vertices", complex->vertex_count()},
              {"simplices", complex->simplices().size()},
              {"basepoint", complex->vertex_ids()[complex->basepoint()]}});
    return 0;
  }
  auto complex = load_complex(a.complex_path);

  if (app.got_subcommand("core")) {
    PLWord w = load_word(a.word_a, complex);
    ReductionTrace trace;
    json doc;
    if (a.as_path) {
      ThinPath reduced = a.with_trace ? path_core(w, trace) : path_core(w);
      doc["core"] = points_to_json(reduced.word().points());
      doc["endpoint"] = point_to_json(reduced.endpoint());
      doc["trivial"] = trivial_flag(reduced.word());
    } else {
      ThinClass reduced = a.with_trace ? core(w, trace) : core(w);
      doc["core"] = points_to_json(reduced.word().points());
      doc["trivial"] = trivial_flag(reduced.word());
    }
    if (a.with_trace) doc["trace"] = trace_to_json(trace);
    emit(doc);
  } else if (app.got_subcommand("eq")) {
    emit(json{{"equal", eq(load_word(a.word_a, complex), load_word(a.word_b, complex))}});
  } else if (app.got_subcommand("mul")) {
    ThinClass product = mul(load_class(a.word_a, complex), load_class(a.word_b, complex));
    emit(json{{"product", points_to_json(product.word().points())},
              {"trivial", trivial_flag(product.word())}});
  } else if (app.got_subcommand("inv")) {
    ThinClass inverse = inv(load_class(a.word_a, complex));
    emit(json{{"inverse", points_to_json(inverse.word().points())}});
  } else if (app.got_subcommand("pow")) {
    ThinClass power = pow(load_class(a.word_a, complex), a.exponent);
    emit(json{{"n", a.exponent},
              {"power", points_to_json(power.word().points())},
              {"trivial", trivial_flag(power.word())}});
  } else if (app.got_subcommand("len")) {
    emit(json{{"length", length(load_word(a.word_a, complex))}});
  } else if (app.got_subcommand("uniform")) {
    const UniformParam u = uniform_breakpoints(load_word(a.word_a, complex));
    emit(json{{"breakpoints", u.breakpoints.t}, {"total_length", u.total_length}});
  } else if (app.got_subcommand("cyclic")) {
    FreeThinClass cls = cyclic_core(load_word(a.word_a, complex));
    emit(json{{"cycle", points_to_json(cls.cycle())}, {"trivial", cls.is_trivial()}});
  } else if (app.got_subcommand("rand")) {
    emit(word_to_json(random_loop(complex, a.steps, a.seed, a.denom)));
  } else if (app.got_subcommand("fuzz-confluence")) {
    SplitMix64 rng(a.seed);
    std::size_t bad = 0;
    json examples = json::array();
    for (std::size_t trial = 0; trial < a.trials; ++trial) {
      PLWord w = bounded_random_loop(complex, rng, a.max_len, a.denom);
      const auto terminals = reduce_all_orders(w, a.max_len);
      const bool ok = terminals.size() == 1 && terminals.front() == core(w).word();
      if (!ok) {
        ++bad;
        if (examples.size() < 5) examples.push_back(word_to_json(w));
      }
    }
    json doc{{"trials", a.trials}, {"non_confluent", bad}};
    if (bad > 0) doc["counterexamples"] = examples;
    emit(doc);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact thin-loop calculator for embedded simplicial complexes"};
  app.require_subcommand(1);
  Args a;

  auto add_complex = [&](CLI::App* cmd) {
    cmd->add_option("complex", a.complex_path, "complex JSON file")->required();
  };

  add_complex(app.add_subcommand("validate", "check a complex file"));

  auto* cmd_core = app.add_subcommand("core", "reduce a loop (or path) to its core");
  add_complex(cmd_core);
  cmd_core->add_option("word", a.word_a, "word JSON file")->required();
  cmd_core->add_flag("--path", a.as_path, "reduce as a path (endpoints pinned)");
  cmd_core->add_flag("--trace", a.with_trace, "include the reduction trace");

  auto* cmd_eq = app.add_subcommand("eq", "thin equality of two loops");
  add_complex(cmd_eq);
  cmd_eq->add_option("a", a.word_a, "first loop file")->required();
  cmd_eq->add_option("b", a.word_b, "second loop file")->required();

  auto* cmd_mul = app.add_subcommand("mul", "product of two thin classes");
  add_complex(cmd_mul);
  cmd_mul->add_option("a", a.word_a, "first loop file")->required();
  cmd_mul->add_option("b", a.word_b, "second loop file")->required();

  auto* cmd_inv = app.add_subcommand("inv", "inverse of a thin class");
  add_complex(cmd_inv);
  cmd_inv->add_option("a", a.word_a, "loop file")->required();

  auto* cmd_pow = app.add_subcommand("pow", "integer power of a thin class");
  add_complex(cmd_pow);
  cmd_pow->add_option("a", a.word_a, "loop file")->required();
  cmd_pow->add_option("n", a.exponent, "exponent (may be negative)")->required();

  auto* cmd_len = app.add_subcommand("len", "total chord length of a word");
  add_complex(cmd_len);
  cmd_len->add_option("w", a.word_a, "word file")->required();

  auto* cmd_uniform = app.add_subcommand("uniform", "constant-speed breakpoints");
  add_complex(cmd_uniform);
  cmd_uniform->add_option("w", a.word_a, "word file")->required();

  auto* cmd_cyclic = app.add_subcommand("cyclic", "free-loop cyclic core");
  add_complex(cmd_cyclic);
  cmd_cyclic->add_option("loop", a.word_a, "loop file")->required();

  auto* cmd_rand = app.add_subcommand("rand", "seeded random loop");
  add_complex(cmd_rand);
  cmd_rand->add_option("--steps", a.steps, "number of random star-walk steps")->required();
  cmd_rand->add_option("--seed", a.seed, "PRNG seed")->required();
  cmd_rand->add_option("--denom", a.denom, "barycentric denominator bound (default 8)");

  auto* cmd_fuzz = app.add_subcommand("fuzz-confluence",
                                      "exhaustive reduction-order fuzzing");
  add_complex(cmd_fuzz);
  cmd_fuzz->add_option("--max-len", a.max_len, "word length cap (default 8)");
  cmd_fuzz->add_option("--trials", a.trials, "number of random words")->required();
  cmd_fuzz->add_option("--seed", a.seed, "PRNG seed")->required();
  cmd_fuzz->add_option("--denom", a.denom, "barycentric denominator bound (default 8)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    return dispatch(app, a);
  } catch (const thinpl::DomainError& e) {
    json doc{{"error", thinpl::to_string(e.kind())}, {"message", e.what()}};
    if (e.index()) doc["index"] = *e.index();
    emit(doc);
    return 1;
  } catch (const std::exception& e) {
    emit(json{{"error", "InternalError"}, {"message", e.what()}});
    return 1;
  }
}
