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

#include "adtlab/adtlab.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "adtlab/core.hpp"
#include "adtlab/decision.hpp"
#include "adtlab/errors.hpp"
#include "adtlab/fo.hpp"
#include "adtlab/generators.hpp"
#include "adtlab/semantics.hpp"
#include "adtlab/sere.hpp"
#include "adtlab/textio.hpp"
#include "adtlab/witness.hpp"

struct adtlab_props {
  adtlab::PropSet set;
};

struct adtlab_adt {
  adtlab::Adt tree;
  adtlab_props props;
};

struct adtlab_fo {
  adtlab::FoFormula formula;
  adtlab_props props;
};

struct adtlab_sere {
  adtlab::Sere expr;
  adtlab_props props;
};

struct adtlab_traces {
  std::vector<adtlab::Trace> list;
  adtlab_props props;
};

namespace {

thread_local std::string last_error;

template <class F>
adtlab_status guard(F&& body) {
  try {
    body();
    return ADTLAB_OK;
  } catch (const adtlab::ParseError& e) {
    last_error = e.what();
    return ADTLAB_E_PARSE;
  } catch (const adtlab::AlphabetMismatch& e) {
    last_error = e.what();
    return ADTLAB_E_ALPHABET;
  } catch (const adtlab::DepthError& e) {
    last_error = e.what();
    return ADTLAB_E_DEPTH;
  } catch (const adtlab::BudgetExceeded& e) {
    last_error = e.what();
    return ADTLAB_E_BUDGET;
  } catch (const adtlab::Error& e) {
    last_error = e.what();
    return ADTLAB_E_INVALID;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return ADTLAB_E_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return ADTLAB_E_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw adtlab::InvalidArgument(std::string(what) + " is null");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void same_props(const adtlab::PropSet& a, const adtlab::PropSet& b) {
  if (!(a == b)) throw adtlab::AlphabetMismatch("objects use different proposition sets");
}

const adtlab::Trace& trace_at(const adtlab_traces* t, std::size_t i) {
  require(t, "traces");
  if (i >= t->list.size()) throw adtlab::InvalidArgument("trace index out of range");
  return t->list[i];
}

adtlab_traces* make_traces(const adtlab::PropSet& props,
                           std::vector<adtlab::Trace> list) {
  return new adtlab_traces{std::move(list), {props}};
}

void fill(const adtlab::Verdict& v, adtlab_verdict* out, adtlab_traces** witness,
          const adtlab::PropSet& props) {
  adtlab_traces* w = nullptr;
  if (witness != nullptr) {
    std::vector<adtlab::Trace> list;
    if (v.witness) list.push_back(*v.witness);
    w = make_traces(props, std::move(list));
  }
  out->answer = static_cast<adtlab_answer>(v.answer);
  out->method = static_cast<adtlab_method>(v.method);
  out->has_bound = v.bound ? 1 : 0;
  out->bound = v.bound.value_or(0);
  out->depth = v.depth;
  if (witness != nullptr) *witness = w;
}

std::optional<std::size_t> bound_of(int has_maxlen, std::size_t maxlen) {
  if (has_maxlen == 0) return std::nullopt;
  return maxlen;
}

adtlab::WitnessKind witness_kind(adtlab_witness_kind k) {
  switch (k) {
    case ADTLAB_WITNESS_W:
      return adtlab::WitnessKind::W;
    case ADTLAB_WITNESS_PLUS:
      return adtlab::WitnessKind::Plus;
    case ADTLAB_WITNESS_MINUS:
      return adtlab::WitnessKind::Minus;
  }
  throw adtlab::InvalidArgument("unknown witness kind");
}

}  // namespace

extern "C" {

const char* adtlab_last_error(void) { return last_error.c_str(); }

const char* adtlab_version(void) { return "0.1.0"; }

void adtlab_string_free(char* s) { std::free(s); }

const char* adtlab_answer_name(adtlab_answer a) {
  return adtlab::to_string(static_cast<adtlab::Answer>(a)).data();
}

const char* adtlab_method_name(adtlab_method m) {
  return adtlab::to_string(static_cast<adtlab::Method>(m)).data();
}

// --- Propositions -------------------------------------------------------------

adtlab_status adtlab_props_new(const char* const* names, size_t count,
                               adtlab_props** out) {
  return guard([&] {
    require(out, "out");
    if (count > 0) require(names, "names");
    std::vector<std::string> v;
    for (size_t i = 0; i < count; ++i) {
      require(names[i], "name");
      v.emplace_back(names[i]);
    }
    *out = new adtlab_props{adtlab::PropSet(std::move(v))};
  });
}

adtlab_status adtlab_props_parse(const char* list, adtlab_props** out) {
  return guard([&] {
    require(list, "list");
    require(out, "out");
    std::vector<std::string> v;
    std::string_view rest(list);
    while (!rest.empty()) {
      std::size_t comma = rest.find(',');
      std::string name(rest.substr(0, comma));
      // Tolerate spaces around names.
      name.erase(0, name.find_first_not_of(' '));
      name.erase(name.find_last_not_of(' ') + 1);
      v.push_back(std::move(name));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
      if (rest.empty()) v.emplace_back();
    }
    *out = new adtlab_props{adtlab::PropSet(std::move(v))};
  });
}

adtlab_status adtlab_props_collect(const char* text, adtlab_dialect dialect,
                                   adtlab_props** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    adtlab::Dialect d = dialect == ADTLAB_DIALECT_FO     ? adtlab::Dialect::Fo
                        : dialect == ADTLAB_DIALECT_SERE ? adtlab::Dialect::Sere
                                                         : adtlab::Dialect::Adt;
    *out = new adtlab_props{adtlab::PropSet(adtlab::collect_props(text, d))};
  });
}

void adtlab_props_free(adtlab_props* p) { delete p; }

size_t adtlab_props_size(const adtlab_props* p) { return p ? p->set.size() : 0; }

const char* adtlab_props_name(const adtlab_props* p, size_t i) {
  if (p == nullptr || i >= p->set.size()) return nullptr;
  return p->set.name(i).c_str();
}

// --- Traces -------------------------------------------------------------------

adtlab_status adtlab_traces_parse_file(const char* text, adtlab_traces** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    adtlab::TraceFile f = adtlab::parse_trace_file(text);
    *out = make_traces(f.props, std::move(f.traces));
  });
}

void adtlab_traces_free(adtlab_traces* t) { delete t; }

size_t adtlab_traces_count(const adtlab_traces* t) { return t ? t->list.size() : 0; }

size_t adtlab_traces_length(const adtlab_traces* t, size_t i) {
  if (t == nullptr || i >= t->list.size()) return 0;
  return t->list[i].size();
}

const adtlab_props* adtlab_traces_props(const adtlab_traces* t) {
  return t ? &t->props : nullptr;
}

adtlab_status adtlab_traces_render(const adtlab_traces* t, size_t i, char** out) {
  return guard([&] {
    const adtlab::Trace& w = trace_at(t, i);
    require(out, "out");
    *out = dup(adtlab::render(w, t->props.set));
  });
}

adtlab_status adtlab_traces_render_inline(const adtlab_traces* t, size_t i,
                                          char** out) {
  return guard([&] {
    const adtlab::Trace& w = trace_at(t, i);
    require(out, "out");
    std::string s;
    for (adtlab::Valuation v : w) {
      if (!s.empty()) s += " ";
      s += adtlab::render_valuation(v, t->props.set);
    }
    *out = dup(w.empty() ? "eps" : s);
  });
}

adtlab_status adtlab_traces_ab_string(const adtlab_traces* t, size_t i, char** out) {
  return guard([&] {
    const adtlab::Trace& w = trace_at(t, i);
    require(out, "out");
    same_props(t->props.set, adtlab::ab_props());
    *out = dup(adtlab::ab_string(w));
  });
}

adtlab_status adtlab_traces_render_file(const adtlab_traces* t, char** out) {
  return guard([&] {
    require(t, "traces");
    require(out, "out");
    *out = dup(adtlab::render_trace_file(t->props.set, t->list));
  });
}

// --- Trees --------------------------------------------------------------------

adtlab_status adtlab_adt_parse(const char* text, const adtlab_props* props,
                               adtlab_adt** out) {
  return guard([&] {
    require(text, "text");
    require(props, "props");
    require(out, "out");
    *out = new adtlab_adt{adtlab::parse_adt(text, props->set), {props->set}};
  });
}

void adtlab_adt_free(adtlab_adt* t) { delete t; }

adtlab_status adtlab_adt_render(const adtlab_adt* t, char** out) {
  return guard([&] {
    require(t, "tree");
    require(out, "out");
    *out = dup(adtlab::render(t->tree, t->props.set));
  });
}

const adtlab_props* adtlab_adt_props(const adtlab_adt* t) {
  return t ? &t->props : nullptr;
}

size_t adtlab_adt_size(const adtlab_adt* t) { return t ? adtlab::size(t->tree) : 0; }

size_t adtlab_adt_depth(const adtlab_adt* t) {
  return t ? adtlab::counterdepth(t->tree) : 0;
}

size_t adtlab_adt_leaves(const adtlab_adt* t) {
  return t ? adtlab::leaves_count(t->tree) : 0;
}

int adtlab_adt_equal(const adtlab_adt* a, const adtlab_adt* b) {
  if (a == nullptr || b == nullptr) return 0;
  return a->props.set == b->props.set && a->tree == b->tree ? 1 : 0;
}

adtlab_status adtlab_member(const adtlab_adt* t, const adtlab_traces* traces, size_t i,
                            int* out) {
  return guard([&] {
    require(t, "tree");
    require(out, "out");
    const adtlab::Trace& w = trace_at(traces, i);
    same_props(t->props.set, traces->props.set);
    *out = adtlab::member(t->tree, w, t->props.set) ? 1 : 0;
  });
}

adtlab_status adtlab_enumerate(const adtlab_adt* t, size_t maxlen, size_t budget,
                               adtlab_traces** out) {
  return guard([&] {
    require(t, "tree");
    require(out, "out");
    *out = make_traces(t->props.set, adtlab::enumerate(t->tree, t->props.set, maxlen, budget));
  });
}

adtlab_status adtlab_gen(const adtlab_adt* t, size_t cap, adtlab_traces** out,
                         int* sound) {
  return guard([&] {
    require(t, "tree");
    require(out, "out");
    adtlab::GenSet g =
        adtlab::gen(t->tree, t->props.set, cap == 0 ? adtlab::kDefaultGeneratorCap : cap);
    std::vector<adtlab::Trace> list(g.traces.begin(), g.traces.end());
    *out = make_traces(t->props.set, std::move(list));
    if (sound != nullptr) *sound = g.sound ? 1 : 0;
  });
}

adtlab_status adtlab_nonempty(const adtlab_adt* t, adtlab_nonempty_method method,
                              int has_maxlen, size_t maxlen, size_t budget,
                              adtlab_verdict* out, adtlab_traces** witness) {
  return guard([&] {
    require(t, "tree");
    require(out, "out");
    adtlab::NonemptyMethod m = method == ADTLAB_NONEMPTY_GEN ? adtlab::NonemptyMethod::Gen
                               : method == ADTLAB_NONEMPTY_BOUNDED
                                   ? adtlab::NonemptyMethod::Bounded
                                   : adtlab::NonemptyMethod::Auto;
    adtlab::Verdict v =
        adtlab::nonempty(t->tree, t->props.set, m, bound_of(has_maxlen, maxlen), budget);
    fill(v, out, witness, t->props.set);
  });
}

adtlab_status adtlab_equiv(const adtlab_adt* a, const adtlab_adt* b,
                           adtlab_equiv_method method, int has_maxlen, size_t maxlen,
                           size_t budget, adtlab_verdict* out,
                           adtlab_traces** witness) {
  return guard([&] {
    require(a, "tree");
    require(b, "tree");
    require(out, "out");
    same_props(a->props.set, b->props.set);
    adtlab::EquivMethod m = method == ADTLAB_EQUIV_GEN0 ? adtlab::EquivMethod::Gen0
                            : method == ADTLAB_EQUIV_REDUCTION
                                ? adtlab::EquivMethod::Reduction
                            : method == ADTLAB_EQUIV_BOUNDED ? adtlab::EquivMethod::Bounded
                                                             : adtlab::EquivMethod::Auto;
    adtlab::Verdict v = adtlab::equiv(a->tree, b->tree, a->props.set, m,
                                      bound_of(has_maxlen, maxlen), budget);
    fill(v, out, witness, a->props.set);
  });
}

// --- First-order formulas -----------------------------------------------------

adtlab_status adtlab_fo_parse(const char* text, const adtlab_props* props,
                              adtlab_fo** out) {
  return guard([&] {
    require(text, "text");
    require(props, "props");
    require(out, "out");
    *out = new adtlab_fo{adtlab::parse_fo(text, props->set), {props->set}};
  });
}

void adtlab_fo_free(adtlab_fo* f) { delete f; }

adtlab_status adtlab_fo_render(const adtlab_fo* f, char** out) {
  return guard([&] {
    require(f, "formula");
    require(out, "out");
    *out = dup(adtlab::render(f->formula, f->props.set));
  });
}

size_t adtlab_fo_size(const adtlab_fo* f) { return f ? f->formula.tree_size() : 0; }

void adtlab_fo_alternation(const adtlab_fo* f, size_t* level, adtlab_alt_kind* kind) {
  if (f == nullptr) return;
  adtlab::AltClass c = adtlab::alternation(f->formula);
  if (level != nullptr) *level = c.level;
  if (kind != nullptr) {
    *kind = c.kind == adtlab::AltKind::Sigma ? ADTLAB_ALT_SIGMA
            : c.kind == adtlab::AltKind::Pi  ? ADTLAB_ALT_PI
                                             : ADTLAB_ALT_BOTH_BELOW;
  }
}

adtlab_status adtlab_fo_eval(const adtlab_fo* f, const adtlab_traces* traces, size_t i,
                             int* out) {
  return guard([&] {
    require(f, "formula");
    require(out, "out");
    const adtlab::Trace& w = trace_at(traces, i);
    same_props(f->props.set, traces->props.set);
    *out = adtlab::eval_fo(f->formula, w) ? 1 : 0;
  });
}

adtlab_status adtlab_fo_sat(const adtlab_fo* f, size_t maxlen, size_t budget,
                            adtlab_traces** out) {
  return guard([&] {
    require(f, "formula");
    require(out, "out");
    std::optional<adtlab::Trace> m =
        adtlab::sat_bounded(f->formula, f->props.set, maxlen, budget);
    std::vector<adtlab::Trace> list;
    if (m) list.push_back(*m);
    *out = make_traces(f->props.set, std::move(list));
  });
}

adtlab_status adtlab_adt_to_fo(const adtlab_adt* t, adtlab_fo** out) {
  return guard([&] {
    require(t, "tree");
    require(out, "out");
    *out = new adtlab_fo{adtlab::adt_to_fo(t->tree, t->props.set), {t->props.set}};
  });
}

adtlab_status adtlab_adt0_to_pi2(const adtlab_adt* t, adtlab_fo** out) {
  return guard([&] {
    require(t, "tree");
    require(out, "out");
    *out = new adtlab_fo{adtlab::adt0_to_pi2(t->tree, t->props.set), {t->props.set}};
  });
}

adtlab_status adtlab_sigma1_to_adt(const adtlab_fo* f, adtlab_adt** out) {
  return guard([&] {
    require(f, "formula");
    require(out, "out");
    *out = new adtlab_adt{adtlab::sigma1_to_adt(f->formula, f->props.set), {f->props.set}};
  });
}

// --- Expressions --------------------------------------------------------------

adtlab_status adtlab_sere_parse(const char* text, const adtlab_props* props,
                                adtlab_sere** out) {
  return guard([&] {
    require(text, "text");
    require(props, "props");
    require(out, "out");
    *out = new adtlab_sere{adtlab::parse_sere(text, props->set), {props->set}};
  });
}

void adtlab_sere_free(adtlab_sere* e) { delete e; }

adtlab_status adtlab_sere_render(const adtlab_sere* e, char** out) {
  return guard([&] {
    require(e, "expression");
    require(out, "out");
    *out = dup(adtlab::render(e->expr, e->props.set));
  });
}

size_t adtlab_sere_size(const adtlab_sere* e) {
  return e ? adtlab::node_count(e->expr) : 0;
}

adtlab_status adtlab_sere_member(const adtlab_sere* e, const adtlab_traces* traces,
                                 size_t i, int* out) {
  return guard([&] {
    require(e, "expression");
    require(out, "out");
    const adtlab::Trace& w = trace_at(traces, i);
    same_props(e->props.set, traces->props.set);
    *out = adtlab::sere_member(e->expr, w) ? 1 : 0;
  });
}

adtlab_status adtlab_adt_to_sere(const adtlab_adt* t, adtlab_sere** out) {
  return guard([&] {
    require(t, "tree");
    require(out, "out");
    *out = new adtlab_sere{adtlab::adt_to_sere(t->tree, t->props.set), {t->props.set}};
  });
}

adtlab_status adtlab_sere_to_adt(const adtlab_sere* e, adtlab_adt** out) {
  return guard([&] {
    require(e, "expression");
    require(out, "out");
    *out = new adtlab_adt{adtlab::sere_to_adt(e->expr, e->props.set), {e->props.set}};
  });
}

// --- Witness languages --------------------------------------------------------

adtlab_status adtlab_witness_tree(size_t k, adtlab_witness_kind kind, adtlab_adt** out) {
  return guard([&] {
    require(out, "out");
    const adtlab::WitnessKind wk = witness_kind(kind);
    adtlab::WitnessTrees trees = adtlab::build_witness_adt(k);
    const adtlab::Adt& pick = wk == adtlab::WitnessKind::W      ? trees.base
                              : wk == adtlab::WitnessKind::Plus ? trees.plus
                                                                : trees.minus;
    *out = new adtlab_adt{pick, {adtlab::ab_props()}};
  });
}

adtlab_status adtlab_witness_words(size_t k, adtlab_witness_kind kind, size_t maxlen,
                                   int recursive, adtlab_traces** out) {
  return guard([&] {
    require(out, "out");
    const adtlab::WitnessKind wk = witness_kind(kind);
    if (k == 0) throw adtlab::InvalidArgument("witness level must be at least 1");
    std::vector<adtlab::Trace> words;
    if (recursive != 0) {
      words = adtlab::recursive_witness(k, wk, maxlen);
    } else {
      adtlab::for_each_trace(adtlab::ab_props(), maxlen, adtlab::kDefaultEnumerationBudget,
                             [&](const adtlab::Trace& w, std::size_t) {
                               if (adtlab::in_witness(w, k, wk)) words.push_back(w);
                               return true;
                             });
    }
    *out = make_traces(adtlab::ab_props(), std::move(words));
  });
}

}  // extern "C"
