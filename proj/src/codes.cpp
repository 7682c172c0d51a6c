#include "idemcodes/codes.hpp"

#include <algorithm>
#include <map>
#include <thread>

namespace idemcodes {

namespace {

/// Reflected s-ary Gray code: digit i of the counter is reflected when the
/// higher digits have odd sum, so consecutive counters differ in one digit.
void gray_digits(i64 v, i64 s, int k, std::vector<i64>& out) {
  i64 sum_higher = 0;
  for (int i = k - 1; i >= 0; --i) {
    i64 d = (v / ipow(s, i)) % s;
    out[i] = (sum_higher % 2 == 0) ? d : s - 1 - d;
    sum_higher += d;
  }
}

/// Table-driven field arithmetic for the enumeration kernels: coordinates
/// are element indices, addition is one lookup, and scaled generator rows
/// are materialized on demand.
struct KernelTables {
  const FieldCtx* F = nullptr;
  i64 s = 0;
  int k = 0, n = 0;
  std::vector<i64> add;                        // s*s addition table
  std::vector<FieldElem> felem;                // index -> element
  std::vector<std::vector<i64>> rows;          // generator rows as indices
  std::vector<std::vector<std::vector<i64>>> scaled;  // [row][scalar], lazy

  KernelTables(const FMatrix& genmat, const FieldCtx& field) {
    F = &field;
    s = field.card();
    k = genmat.rows;
    n = genmat.cols;
    felem.resize(s);
    for (i64 i = 0; i < s; ++i) felem[i] = field.from_index(i);
    add.resize(s * s);
    for (i64 a = 0; a < s; ++a)
      for (i64 b = 0; b < s; ++b) add[a * s + b] = field.index_of(felem[a] + felem[b]);
    rows.assign(k, std::vector<i64>(n));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < n; ++j) rows[i][j] = field.index_of(genmat.at(i, j));
    scaled.assign(k, std::vector<std::vector<i64>>(s));
  }

  const std::vector<i64>& scaled_row(int i, i64 c) {
    auto& r = scaled[i][c];
    if (r.empty()) {
      r.resize(n);
      for (int j = 0; j < n; ++j) r[j] = F->index_of(felem[c] * felem[rows[i][j]]);
    }
    return r;
  }
};

/// word += scaled row, maintaining the nonzero count.
void add_row(std::vector<i64>& word, i64& weight, const std::vector<i64>& srow,
             const std::vector<i64>& add, i64 s) {
  for (size_t j = 0; j < word.size(); ++j) {
    if (srow[j] == 0) continue;
    i64 was = word[j] != 0;
    word[j] = add[word[j] * s + srow[j]];
    weight += (word[j] != 0) - was;
  }
}

/// Enumerates codeword weights for message counters in [lo, hi); counter 0
/// is the zero word. Each thread owns one KernelTables instance.
template <typename Sink>
void enumerate_range(KernelTables& kt, i64 lo, i64 hi, bool gray, Sink&& sink) {
  int k = kt.k;
  i64 s = kt.s;
  std::vector<i64> word(kt.n, 0);
  i64 weight = 0;
  std::vector<i64> digits(k, 0), prev(k, 0);

  if (gray) {
    gray_digits(lo, s, k, prev);
    for (int i = 0; i < k; ++i)
      if (prev[i] != 0) add_row(word, weight, kt.scaled_row(i, prev[i]), kt.add, s);
    sink(weight);
    for (i64 v = lo + 1; v < hi; ++v) {
      gray_digits(v, s, k, digits);
      for (int i = 0; i < k; ++i) {
        if (digits[i] == prev[i]) continue;
        i64 delta = kt.F->index_of(kt.felem[digits[i]] - kt.felem[prev[i]]);
        add_row(word, weight, kt.scaled_row(i, delta), kt.add, s);
        prev[i] = digits[i];
      }
      sink(weight);
    }
  } else {
    for (i64 v = lo; v < hi; ++v) {
      std::fill(word.begin(), word.end(), 0);
      weight = 0;
      i64 x = v;
      for (int i = 0; i < k && x > 0; ++i, x /= s) {
        i64 d = x % s;
        if (d != 0) add_row(word, weight, kt.scaled_row(i, d), kt.add, s);
      }
      sink(weight);
    }
  }
}

i64 message_space(i64 s, int k, i64 cap) {
  i64 total = 1;
  for (int i = 0; i < k; ++i) {
    if (total > cap / s + 1) return cap + 1;
    total *= s;
  }
  return total;
}

struct Shard {
  i64 min_weight = -1;
  std::vector<i64> counts;
};

std::vector<Shard> enumerate_parallel(const FMatrix& genmat, const FieldCtx& F, i64 total,
                                      int threads, bool gray, bool with_counts, int n) {
  require(F.card() <= 65536, errc::budget_exceeded, "field too large for enumeration tables");
  threads = std::max(1, threads);
  i64 span = total - 1;  // skip the zero word at counter 0
  if (span <= 0) return {};
  threads = static_cast<int>(std::min<i64>(threads, span));
  std::vector<Shard> shards(threads);
  auto run = [&](int idx) {
    KernelTables kt(genmat, F);
    i64 lo = 1 + span * idx / threads;
    i64 hi = 1 + span * (idx + 1) / threads;
    Shard& sh = shards[idx];
    if (with_counts) sh.counts.assign(n + 1, 0);
    enumerate_range(kt, lo, hi, gray, [&](i64 w) {
      if (sh.min_weight < 0 || w < sh.min_weight) sh.min_weight = w;
      if (with_counts) ++sh.counts[w];
    });
  };
  if (threads == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(run, i);
    for (auto& t : pool) t.join();
  }
  return shards;
}

}  // namespace

LinearCode code_from_idempotent(const Group& G, FieldCtxPtr field, const AlgElem& e) {
  require(e.group == &G, errc::context_mismatch, "idempotent over a different group");
  require(e.field && e.field->same_field(*field), errc::coefficients_not_in_base_field,
          "idempotent coefficients must lie in the base field");
  LinearCode c;
  c.field = field;
  c.length = G.n;
  FMatrix rows(field.get(), G.n, G.n);
  for (int g = 0; g < G.n; ++g) {
    int gi = G.inv(g);
    for (int x = 0; x < G.n; ++x) rows.at(g, x) = e.coeffs[G.mul(gi, x)];
  }
  auto pivots = rref_inplace(rows);
  c.k = static_cast<int>(pivots.size());
  c.genmat = FMatrix(field.get(), c.k, G.n);
  for (int i = 0; i < c.k; ++i)
    for (int j = 0; j < G.n; ++j) c.genmat.at(i, j) = rows.at(i, j);
  c.prov.ordering_hash = ordering_hash(G);
  c.prov.group_spec = G.spec;
  return c;
}

i64 minimum_distance(const LinearCode& c, DistMethod method, i64 budget, int threads,
                     bool* exact) {
  if (c.k == 0) {
    if (exact) *exact = true;
    return 0;
  }
  i64 total = message_space(c.field->card(), c.k, budget);
  bool within = total <= budget;
  i64 scanned = within ? total : budget + 1;
  auto shards = enumerate_parallel(c.genmat, *c.field, scanned, threads,
                                   method == DistMethod::gray, false, c.length);
  i64 best = -1;
  for (const auto& sh : shards)
    if (sh.min_weight >= 0 && (best < 0 || sh.min_weight < best)) best = sh.min_weight;
  if (exact) *exact = within;
  return best;
}

std::vector<i64> weight_distribution(const LinearCode& c, i64 budget, int threads) {
  std::vector<i64> counts(c.length + 1, 0);
  counts[0] = 1;
  if (c.k == 0) return counts;
  i64 total = message_space(c.field->card(), c.k, budget);
  require(total <= budget, errc::budget_exceeded,
          "message space exceeds the enumeration budget");
  auto shards =
      enumerate_parallel(c.genmat, *c.field, total, threads, true, true, c.length);
  for (const auto& sh : shards)
    for (int w = 0; w <= c.length; ++w) counts[w] += sh.counts[w];
  return counts;
}

std::string export_genmat(const LinearCode& c) {
  std::string out = std::to_string(c.length) + " " + std::to_string(c.k) + " " +
                    std::to_string(c.field->card()) + "\n";
  for (int i = 0; i < c.k; ++i) {
    for (int j = 0; j < c.length; ++j) {
      if (j) out += " ";
      const auto& coeffs = c.genmat.at(i, j).coeffs();
      for (size_t r = 0; r < coeffs.size(); ++r) {
        if (r) out += ",";
        out += std::to_string(coeffs[r]);
      }
    }
    out += "\n";
  }
  return out;
}

std::string ordering_hash(const Group& G) {
  std::uint64_t h = 1469598103934665603ull;
  for (const auto& l : G.labels) {
    for (char ch : l) {
      h ^= static_cast<unsigned char>(ch);
      h *= 1099511628211ull;
    }
    h ^= '|';
    h *= 1099511628211ull;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// ---------------------------------------------------------------------------
// Minimal-ideal survey

namespace {

struct SurveyCtx {
  CrossedCtx cc;
  std::vector<FieldElem> zel;  // subfield Z = F_{s^{o/n}} inside the top field
  i64 qprime = 0;
  i64 lines = 0;
};

SurveyCtx make_survey_ctx(const ShodaCtx& ctx, SspPtr pair, const CyclotomicClass& cls) {
  SurveyCtx sc;
  sc.cc = make_crossed_ctx(ctx, pair, cls);
  int n = sc.cc.n;
  i64 f = pair->o / pair->ehi;
  sc.qprime = 1;
  for (i64 i = 0; i < f; ++i) sc.qprime *= ctx.s();
  require(sc.qprime <= 65536, errc::budget_exceeded, "component center too large to survey");
  sc.lines = 1;
  for (int i = 1; i < n; ++i) sc.lines = sc.lines * sc.qprime + 1;  // (q^n-1)/(q-1)
  if (n > 1) {
    const FieldCtx* top = sc.cc.ext->top().get();
    sc.zel.push_back(top->zero());
    FieldElem eta = top->generator().pow((top->card() - 1) / (sc.qprime - 1));
    FieldElem x = top->one();
    for (i64 j = 0; j + 1 < sc.qprime; ++j) {
      sc.zel.push_back(x);
      x *= eta;
    }
    std::sort(sc.zel.begin(), sc.zel.end());
  }
  return sc;
}

/// Rank-1 corner idempotent for line index l: the row functional with
/// leading coefficient 1 at position `lead` and free subfield entries after.
AlgElem line_idempotent(const SurveyCtx& sc, i64 line) {
  int n = sc.cc.n;
  const FieldCtx* top = sc.cc.ext->top().get();
  if (n == 1) return sc.cc.eps;
  int lead = 0;
  i64 off = line;
  for (; lead < n; ++lead) {
    i64 block = 1;
    for (int i = 0; i < n - 1 - lead; ++i) block *= sc.qprime;
    if (off < block) break;
    off -= block;
  }
  require(lead < n, errc::bad_parameters, "line index out of range");
  FMatrix f(top, n, n);
  f.at(lead, lead) = top->one();
  i64 x = off;
  for (int j = n - 1 - lead - 1; j >= 0; --j) {
    i64 base = 1;
    for (int i = 0; i < j; ++i) base *= sc.qprime;
    f.at(lead, lead + 1 + j) = sc.zel[x / base];
    x %= base;
  }
  AlgElem c = psi_inverse(sc.cc, f);
  require(is_idempotent(c), errc::internal, "survey generator is not idempotent");
  return c;
}

}  // namespace

AlgElem minimal_ideal_idempotent(const ShodaCtx& ctx, SspPtr pair, const CyclotomicClass& cls,
                                 i64 line) {
  SurveyCtx sc = make_survey_ctx(ctx, pair, cls);
  require(line >= 0 && line < sc.lines, errc::bad_parameters, "line index out of range");
  return line_idempotent(sc, line);
}

IdealSurvey survey_minimal_ideals(const ShodaCtx& ctx, SspPtr pair, const CyclotomicClass& cls,
                                  i64 budget, int threads) {
  const Group& G = ctx.group();
  SurveyCtx sc = make_survey_ctx(ctx, pair, cls);
  i64 kdim = (G.n / pair->H.order()) * (pair->o / pair->ehi);
  require(message_space(ctx.s(), static_cast<int>(kdim), budget) <= budget,
          errc::budget_exceeded, "minimal-ideal dimension exceeds the enumeration budget");
  IdealSurvey survey;
  survey.lines = sc.lines;
  std::map<std::pair<int, i64>, IdealSurveyRow> hist;
  for (i64 l = 0; l < sc.lines; ++l) {
    AlgElem c = line_idempotent(sc, l);
    LinearCode code = code_from_idempotent(G, ctx.field(), c);
    require(code.k == kdim, errc::internal, "survey ideal has unexpected dimension");
    i64 d = minimum_distance(code, DistMethod::gray, budget, threads);
    auto [it, fresh] = hist.try_emplace({code.k, d});
    if (fresh) {
      it->second.k = code.k;
      it->second.d = d;
      it->second.repr_line = l;
    }
    ++it->second.count;
  }
  for (auto& [key, row] : hist) survey.rows.push_back(row);
  std::sort(survey.rows.begin(), survey.rows.end(),
            [](const IdealSurveyRow& a, const IdealSurveyRow& b) {
              if (a.k != b.k) return a.k < b.k;
              return a.d > b.d;
            });
  return survey;
}

CodeSearchReport code_search(const ShodaCtx& ctx, SearchStrategy strategy, i64 budget,
                             int threads, bool with_weights, bool with_codes) {
  const Group& G = ctx.group();
  CodeSearchReport report;
  WedderburnReport wb = wedderburn_report(ctx);
  bool nilpotent = is_nilpotent(G);

  for (const ComponentInfo& comp : wb.components) {
    std::vector<std::pair<SspPtr, CyclotomicClass>> variants;
    variants.emplace_back(comp.pair, comp.cls);
    if (strategy != SearchStrategy::all_components)
      for (const auto& alias : comp.aliases) variants.push_back(alias);

    for (const auto& [pair, cls] : variants) {
      ComponentCodes cc;
      cc.pair = pair;
      cc.cls = cls;
      cc.matrix_size = comp.matrix_size;
      cc.field_order = comp.field_order;

      std::vector<PrimSet> sets;
      std::string reason;
      if (pair->twisting_trivial) {
        try {
          sets.push_back(primitive_idempotents_trivial_twisting(ctx, pair, cls));
        } catch (const error& err) {
          reason = err.what();
        }
      }
      if (nilpotent && (sets.empty() || strategy != SearchStrategy::all_components)) {
        try {
          sets.push_back(primitive_idempotents_nilpotent(ctx, pair, cls));
        } catch (const error& err) {
          if (!reason.empty()) reason += "; ";
          reason += err.what();
        }
      }
      if (sets.empty()) {
        cc.supported = false;
        cc.skip_reason = reason.empty() ? "nontrivial twisting (no supported construction)"
                                        : reason;
        report.components.push_back(std::move(cc));
        continue;
      }
      cc.supported = true;
      report.any_supported = true;
      cc.sets = sets;

      for (const PrimSet& ps : sets) {
        if (!with_codes) break;
        int count = strategy == SearchStrategy::all_components
                        ? 1
                        : static_cast<int>(ps.idems.size());
        for (int i = 0; i < count; ++i) {
          LinearCode code = code_from_idempotent(G, ctx.field(), ps.idems[i]);
          code.d = minimum_distance(code, DistMethod::gray, budget, threads, &code.d_exact);
          if (with_weights) {
            try {
              code.weights = weight_distribution(code, budget, threads);
            } catch (const error&) {
              // over budget: leave weights empty
            }
          }
          code.prov.H = pair->H.elems;
          code.prov.K = pair->K.elems;
          code.prov.class_residues = cls.residues;
          code.prov.idempotent_index = i;
          code.prov.method = ps.method;
          code.prov.idempotent_note = ps.note;
          cc.codes.push_back(std::move(code));
        }
        if (strategy == SearchStrategy::all_components) break;
      }

      if (with_codes && strategy == SearchStrategy::all_minimal_ideals &&
          pair->twisting_trivial) {
        try {
          cc.survey = survey_minimal_ideals(ctx, pair, cls, budget, threads);
          SurveyCtx scx = make_survey_ctx(ctx, pair, cls);
          for (const auto& row : cc.survey.rows) {
            LinearCode code =
                code_from_idempotent(G, ctx.field(), line_idempotent(scx, row.repr_line));
            code.d = row.d;
            if (with_weights) {
              try {
                code.weights = weight_distribution(code, budget, threads);
              } catch (const error&) {
              }
            }
            code.prov.H = pair->H.elems;
            code.prov.K = pair->K.elems;
            code.prov.class_residues = cls.residues;
            code.prov.idempotent_index = static_cast<int>(row.repr_line);
            code.prov.method = "minimal-ideal";
            cc.codes.push_back(std::move(code));
          }
        } catch (const error& err) {
          cc.survey_skip_reason = err.what();
        }
      } else if (strategy == SearchStrategy::all_minimal_ideals && !pair->twisting_trivial) {
        cc.survey_skip_reason = "nontrivial twisting (no crossed-product coordinates)";
      }

      std::sort(cc.codes.begin(), cc.codes.end(), [](const LinearCode& a, const LinearCode& b) {
        if (a.k != b.k) return a.k < b.k;
        if (a.d != b.d) return a.d > b.d;
        if (a.prov.method != b.prov.method) return a.prov.method < b.prov.method;
        return a.prov.idempotent_index < b.prov.idempotent_index;
      });
      report.components.push_back(std::move(cc));
      if (strategy == SearchStrategy::all_components) break;
    }
  }
  return report;
}

}  // namespace idemcodes
