// Copyright 2026 The adtlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// adtlab command-line front end. Every subcommand forwards to the C API.
//
// Exit status: 0 when a verdict was computed (negative ones included),
// 1 on usage, input or parse errors, 2 when a budget refuses the work.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "adtlab/adtlab.h"
#include "json.hpp"

namespace {

using Json = nlohmann::ordered_json;

struct Failure {
  int exit_code;
  std::string message;
};

[[noreturn]] void usage(const std::string& message) { throw Failure{1, message}; }

void check(adtlab_status s) {
  if (s == ADTLAB_OK) return;
  throw Failure{s == ADTLAB_E_BUDGET ? 2 : 1, adtlab_last_error()};
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Props = std::unique_ptr<adtlab_props, Deleter<adtlab_props, adtlab_props_free>>;
using Tree = std::unique_ptr<adtlab_adt, Deleter<adtlab_adt, adtlab_adt_free>>;
using Fo = std::unique_ptr<adtlab_fo, Deleter<adtlab_fo, adtlab_fo_free>>;
using Sere = std::unique_ptr<adtlab_sere, Deleter<adtlab_sere, adtlab_sere_free>>;
using Traces =
    std::unique_ptr<adtlab_traces, Deleter<adtlab_traces, adtlab_traces_free>>;

std::string take(char* s) {
  std::string out(s);
  adtlab_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) usage("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string inline_trace(const adtlab_traces* t, std::size_t i) {
  char* s = nullptr;
  check(adtlab_traces_render_inline(t, i, &s));
  return take(s);
}

std::string ab_word(const adtlab_traces* t, std::size_t i) {
  char* s = nullptr;
  check(adtlab_traces_ab_string(t, i, &s));
  return take(s);
}

Json names_of(const adtlab_props* p) {
  Json out = Json::array();
  for (std::size_t i = 0; i < adtlab_props_size(p); ++i) out.push_back(adtlab_props_name(p, i));
  return out;
}

struct Options {
  std::string adt;
  std::string adt2;
  std::string traces;
  std::string fo;
  std::string sere;
  std::size_t maxlen = 4;
  std::string budget = "1e6";
  std::string method = "auto";
  std::string format = "text";
  std::optional<std::string> props;
  std::size_t level = 1;
  std::optional<std::size_t> enumerate;
  std::string kind = "w";
  bool recursive = false;
  std::size_t cap = 0;
};

class Runner {
 public:
  Runner(std::string command, Options opt) : command_(std::move(command)), opt_(std::move(opt)) {
    report_["command"] = command_;
    report_["inputs"] = Json::object();
  }

  int run();

 private:
  std::size_t budget() const {
    double v = 0;
    try {
      std::size_t used = 0;
      v = std::stod(opt_.budget, &used);
      if (used != opt_.budget.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      usage("--budget expects a number, got '" + opt_.budget + "'");
    }
    if (!(v >= 1) || v != std::floor(v) || v > 1e18) usage("--budget must be a positive integer");
    return static_cast<std::size_t>(v);
  }

  const std::string& need(const std::string& value, const char* flag) {
    if (value.empty()) usage(std::string(command_) + " needs " + flag);
    return value;
  }

  std::string input(const std::string& value, const char* flag, const char* key) {
    std::string text = read_file(need(value, flag));
    report_["inputs"][key] = value;
    return text;
  }

  // --props, else the trace file header, else names found in `text`.
  Props props_for(const std::string& text, adtlab_dialect dialect,
                  const adtlab_traces* traces = nullptr) {
    adtlab_props* p = nullptr;
    if (opt_.props) {
      check(adtlab_props_parse(opt_.props->c_str(), &p));
    } else if (traces != nullptr) {
      const adtlab_props* from = adtlab_traces_props(traces);
      std::vector<const char*> names;
      for (std::size_t i = 0; i < adtlab_props_size(from); ++i) {
        names.push_back(adtlab_props_name(from, i));
      }
      check(adtlab_props_new(names.data(), names.size(), &p));
    } else {
      check(adtlab_props_collect(text.c_str(), dialect, &p));
    }
    Props out(p);
    report_["inputs"]["props"] = names_of(out.get());
    return out;
  }

  Traces load_traces() {
    std::string text = input(opt_.traces, "--traces", "traces");
    adtlab_traces* t = nullptr;
    check(adtlab_traces_parse_file(text.c_str(), &t));
    return Traces(t);
  }

  Tree parse_tree(const std::string& text, const adtlab_props* props) {
    adtlab_adt* t = nullptr;
    check(adtlab_adt_parse(text.c_str(), props, &t));
    return Tree(t);
  }

  Tree load_tree(const adtlab_traces* traces = nullptr) {
    std::string text = input(opt_.adt, "--adt", "adt");
    Props props = props_for(text, ADTLAB_DIALECT_ADT, traces);
    return parse_tree(text, props.get());
  }

  Fo load_fo(const adtlab_traces* traces = nullptr) {
    std::string text = input(opt_.fo, "--fo", "fo");
    Props props = props_for(text, ADTLAB_DIALECT_FO, traces);
    adtlab_fo* f = nullptr;
    check(adtlab_fo_parse(text.c_str(), props.get(), &f));
    return Fo(f);
  }

  Sere load_sere(const adtlab_traces* traces = nullptr) {
    std::string text = input(opt_.sere, "--sere", "sere");
    Props props = props_for(text, ADTLAB_DIALECT_SERE, traces);
    adtlab_sere* e = nullptr;
    check(adtlab_sere_parse(text.c_str(), props.get(), &e));
    return Sere(e);
  }

  void tree_result(const adtlab_adt* t) {
    char* s = nullptr;
    check(adtlab_adt_render(t, &s));
    std::string r = take(s);
    report_["result"] = r;
    report_["depth"] = adtlab_adt_depth(t);
    report_["size"] = adtlab_adt_size(t);
    lines_.push_back(r);
  }

  void fo_result(const adtlab_fo* f) {
    char* s = nullptr;
    check(adtlab_fo_render(f, &s));
    std::string r = take(s);
    std::size_t level = 0;
    adtlab_alt_kind kind = ADTLAB_ALT_BOTH_BELOW;
    adtlab_fo_alternation(f, &level, &kind);
    std::string alt = kind == ADTLAB_ALT_SIGMA ? "Sigma" + std::to_string(level)
                      : kind == ADTLAB_ALT_PI  ? "Pi" + std::to_string(level)
                                               : "Sigma" + std::to_string(level) + "&Pi" +
                                                    std::to_string(level);
    report_["result"] = {{"formula", r}, {"alternation", alt}};
    report_["size"] = adtlab_fo_size(f);
    lines_.push_back(r);
    lines_.push_back("alternation: " + alt);
  }

  void trace_list(const adtlab_traces* list, bool ab) {
    Json out = Json::array();
    for (std::size_t i = 0; i < adtlab_traces_count(list); ++i) {
      std::string w = ab ? ab_word(list, i) : inline_trace(list, i);
      out.push_back(w);
      lines_.push_back(w);
    }
    report_["result"] = out;
  }

  void per_trace(const adtlab_traces* traces,
                 const std::function<adtlab_status(std::size_t, int*)>& test) {
    Json out = Json::array();
    for (std::size_t i = 0; i < adtlab_traces_count(traces); ++i) {
      int r = 0;
      check(test(i, &r));
      out.push_back(r != 0);
      lines_.push_back(r != 0 ? "true" : "false");
    }
    report_["result"] = out;
  }

  void verdict(const adtlab_verdict& v, const adtlab_traces* witness) {
    const std::string answer = adtlab_answer_name(v.answer);
    const std::string method = adtlab_method_name(v.method);
    report_["result"] = {{"answer", answer}, {"method", method}};
    lines_.push_back(answer);
    lines_.push_back("method: " + method);
    if (adtlab_traces_count(witness) > 0) {
      std::string w = inline_trace(witness, 0);
      report_["witness"] = w;
      lines_.push_back("witness: " + w);
    }
    if (v.has_bound != 0) bound(v.bound);
    report_["depth"] = v.depth;
    lines_.push_back("depth: " + std::to_string(v.depth));
  }

  void bound(std::size_t n) {
    report_["bound"] = n;
    lines_.push_back("bound: " + std::to_string(n));
  }

  void emit() const {
    if (opt_.format == "json") {
      std::cout << report_.dump(2) << "\n";
      return;
    }
    for (const std::string& l : lines_) std::cout << l << "\n";
  }

  std::string command_;
  Options opt_;
  Json report_;
  std::vector<std::string> lines_;
};

int Runner::run() {
  if (opt_.format != "text" && opt_.format != "json") {
    usage("--format must be text or json");
  }
  const std::size_t max = opt_.maxlen;
  const std::string& c = command_;

  if (c == "parse") {
    tree_result(load_tree().get());
  } else if (c == "depth") {
    Tree t = load_tree();
    report_["result"] = adtlab_adt_depth(t.get());
    report_["depth"] = adtlab_adt_depth(t.get());
    lines_.push_back(std::to_string(adtlab_adt_depth(t.get())));
  } else if (c == "size") {
    Tree t = load_tree();
    report_["result"] = {{"size", adtlab_adt_size(t.get())},
                         {"leaves", adtlab_adt_leaves(t.get())}};
    report_["size"] = adtlab_adt_size(t.get());
    lines_.push_back(std::to_string(adtlab_adt_size(t.get())));
  } else if (c == "member") {
    Traces traces = load_traces();
    Tree t = load_tree(traces.get());
    per_trace(traces.get(), [&](std::size_t i, int* r) {
      return adtlab_member(t.get(), traces.get(), i, r);
    });
  } else if (c == "enumerate") {
    Tree t = load_tree();
    adtlab_traces* out = nullptr;
    check(adtlab_enumerate(t.get(), max, budget(), &out));
    Traces list(out);
    trace_list(list.get(), false);
    bound(max);
  } else if (c == "gen") {
    Tree t = load_tree();
    adtlab_traces* out = nullptr;
    int sound = 0;
    check(adtlab_gen(t.get(), opt_.cap, &out, &sound));
    Traces list(out);
    trace_list(list.get(), false);
    report_["result"] = {{"generators", report_["result"]}, {"sound", sound != 0}};
    report_["depth"] = adtlab_adt_depth(t.get());
    lines_.push_back(std::string("sound: ") + (sound != 0 ? "true" : "false"));
  } else if (c == "nonempty") {
    Tree t = load_tree();
    adtlab_nonempty_method m = ADTLAB_NONEMPTY_AUTO;
    if (opt_.method == "gen") {
      m = ADTLAB_NONEMPTY_GEN;
    } else if (opt_.method == "bounded") {
      m = ADTLAB_NONEMPTY_BOUNDED;
    } else if (opt_.method != "auto") {
      usage("nonempty --method must be auto, gen or bounded");
    }
    adtlab_verdict v{};
    adtlab_traces* w = nullptr;
    check(adtlab_nonempty(t.get(), m, 1, max, budget(), &v, &w));
    Traces witness(w);
    verdict(v, witness.get());
  } else if (c == "equiv") {
    std::string text1 = input(opt_.adt, "--adt", "adt");
    std::string text2 = input(opt_.adt2, "--adt2", "adt2");
    Props props = props_for(text1 + "\n" + text2, ADTLAB_DIALECT_ADT);
    Tree t1 = parse_tree(text1, props.get());
    Tree t2 = parse_tree(text2, props.get());
    adtlab_equiv_method m = ADTLAB_EQUIV_AUTO;
    if (opt_.method == "gen0") {
      m = ADTLAB_EQUIV_GEN0;
    } else if (opt_.method == "reduction") {
      m = ADTLAB_EQUIV_REDUCTION;
    } else if (opt_.method == "bounded") {
      m = ADTLAB_EQUIV_BOUNDED;
    } else if (opt_.method != "auto") {
      usage("equiv --method must be auto, gen0, reduction or bounded");
    }
    adtlab_verdict v{};
    adtlab_traces* w = nullptr;
    check(adtlab_equiv(t1.get(), t2.get(), m, 1, max, budget(), &v, &w));
    Traces witness(w);
    verdict(v, witness.get());
  } else if (c == "to-fo" || c == "to-pi2") {
    Tree t = load_tree();
    adtlab_fo* f = nullptr;
    check(c == "to-fo" ? adtlab_adt_to_fo(t.get(), &f) : adtlab_adt0_to_pi2(t.get(), &f));
    fo_result(Fo(f).get());
  } else if (c == "fo-eval") {
    Traces traces = load_traces();
    Fo f = load_fo(traces.get());
    per_trace(traces.get(), [&](std::size_t i, int* r) {
      return adtlab_fo_eval(f.get(), traces.get(), i, r);
    });
  } else if (c == "fo-sat") {
    Fo f = load_fo();
    adtlab_traces* out = nullptr;
    check(adtlab_fo_sat(f.get(), max, budget(), &out));
    Traces model(out);
    const bool sat = adtlab_traces_count(model.get()) > 0;
    const std::string answer = sat ? "sat" : "no-model-up-to-bound";
    report_["result"] = answer;
    lines_.push_back(answer);
    if (sat) {
      std::string w = inline_trace(model.get(), 0);
      report_["witness"] = w;
      lines_.push_back("witness: " + w);
    }
    bound(max);
  } else if (c == "sigma1-to-adt") {
    Fo f = load_fo();
    adtlab_adt* t = nullptr;
    check(adtlab_sigma1_to_adt(f.get(), &t));
    tree_result(Tree(t).get());
  } else if (c == "to-sere") {
    Tree t = load_tree();
    adtlab_sere* e = nullptr;
    check(adtlab_adt_to_sere(t.get(), &e));
    Sere expr(e);
    char* s = nullptr;
    check(adtlab_sere_render(expr.get(), &s));
    std::string r = take(s);
    report_["result"] = r;
    report_["size"] = adtlab_sere_size(expr.get());
    lines_.push_back(r);
  } else if (c == "from-sere") {
    Sere e = load_sere();
    adtlab_adt* t = nullptr;
    check(adtlab_sere_to_adt(e.get(), &t));
    tree_result(Tree(t).get());
  } else if (c == "sere-member") {
    Traces traces = load_traces();
    Sere e = load_sere(traces.get());
    per_trace(traces.get(), [&](std::size_t i, int* r) {
      return adtlab_sere_member(e.get(), traces.get(), i, r);
    });
  } else if (c == "witness") {
    adtlab_witness_kind kind = ADTLAB_WITNESS_W;
    if (opt_.kind == "plus") {
      kind = ADTLAB_WITNESS_PLUS;
    } else if (opt_.kind == "minus") {
      kind = ADTLAB_WITNESS_MINUS;
    } else if (opt_.kind != "w") {
      usage("witness --kind must be w, plus or minus");
    }
    report_["inputs"]["level"] = opt_.level;
    report_["inputs"]["kind"] = opt_.kind;
    if (opt_.recursive) {
      const std::size_t n = opt_.enumerate.value_or(max);
      adtlab_traces* out = nullptr;
      check(adtlab_witness_words(opt_.level, kind, n, 1, &out));
      Traces words(out);
      trace_list(words.get(), true);
      bound(n);
      emit();
      return 0;
    }
    if (opt_.enumerate) {
      adtlab_adt* raw = nullptr;
      check(adtlab_witness_tree(opt_.level, kind, &raw));
      Tree t(raw);
      adtlab_traces* out = nullptr;
      check(adtlab_enumerate(t.get(), *opt_.enumerate, budget(), &out));
      Traces words(out);
      trace_list(words.get(), true);
      report_["depth"] = adtlab_adt_depth(t.get());
      bound(*opt_.enumerate);
    } else {
      // All three trees of the level, each in the tree syntax.
      Json trees = Json::object();
      std::size_t depth = 0;
      const std::pair<const char*, adtlab_witness_kind> kinds[] = {
          {"w", ADTLAB_WITNESS_W}, {"plus", ADTLAB_WITNESS_PLUS}, {"minus", ADTLAB_WITNESS_MINUS}};
      for (const auto& [name, k] : kinds) {
        adtlab_adt* raw = nullptr;
        check(adtlab_witness_tree(opt_.level, k, &raw));
        Tree t(raw);
        char* text = nullptr;
        check(adtlab_adt_render(t.get(), &text));
        std::string r = take(text);
        trees[name] = r;
        depth = std::max(depth, adtlab_adt_depth(t.get()));
        lines_.push_back(std::string(name) + ": " + r);
      }
      report_["result"] = trees;
      report_["depth"] = depth;
      lines_.push_back("depth: " + std::to_string(depth));
    }
  } else {
    usage("unknown command " + c);
  }
  emit();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Attack-defense tree analyses"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--adt", opt.adt, "tree file");
  app.add_option("--adt2", opt.adt2, "second tree file");
  app.add_option("--traces", opt.traces, "trace file");
  app.add_option("--fo", opt.fo, "first-order formula file");
  app.add_option("--sere", opt.sere, "expression file");
  app.add_option("--maxlen", opt.maxlen, "length bound for enumeration")->capture_default_str();
  app.add_option("--budget", opt.budget, "candidate budget for enumeration")
      ->capture_default_str();
  app.add_option("--method", opt.method, "decision method")->capture_default_str();
  app.add_option("--format", opt.format, "text or json")->capture_default_str();
  app.add_option("--props", opt.props, "comma-separated propositions");

  const std::vector<std::pair<std::string, std::string>> commands{
      {"parse", "parse and print a tree"},
      {"depth", "countermeasure-depth of a tree"},
      {"size", "size of a tree"},
      {"member", "membership of each trace"},
      {"enumerate", "accepted traces up to --maxlen"},
      {"gen", "generator set"},
      {"nonempty", "non-emptiness"},
      {"equiv", "equivalence of --adt and --adt2"},
      {"to-fo", "first-order translation"},
      {"fo-eval", "evaluate a first-order sentence on each trace"},
      {"fo-sat", "search a model up to --maxlen"},
      {"to-pi2", "forall-exists translation of a depth-0 tree"},
      {"sigma1-to-adt", "depth-0 tree for an existential sentence"},
      {"to-sere", "expression for a tree"},
      {"from-sere", "tree for an expression"},
      {"sere-member", "expression membership of each trace"},
      {"witness", "witness trees and languages over {a, b}"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (name == "gen") sub->add_option("--cap", opt.cap, "generator cap (0 for default)");
    if (name == "witness") {
      sub->add_option("level", opt.level, "level k >= 1")->required();
      sub->add_option("--enumerate", opt.enumerate, "list words up to this length");
      sub->add_option("--kind", opt.kind, "w, plus or minus")->capture_default_str();
      sub->add_flag("--recursive", opt.recursive, "use the recursive characterization");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    Runner runner(app.get_subcommands().front()->get_name(), opt);
    return runner.run();
  } catch (const Failure& f) {
    std::cerr << "adtlab: " << f.message << "\n";
    return f.exit_code;
  }
}
