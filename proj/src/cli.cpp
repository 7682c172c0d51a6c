#include "idemcodes/cli.hpp"

#include <chrono>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace idemcodes {

using ordered_json = nlohmann::ordered_json;

namespace {

struct SpecParser {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  [[noreturn]] void err(const std::string& msg) {
    fail(errc::parse_error, msg + " at position " + std::to_string(pos) + " in '" + s + "'");
  }

  void expect(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c) err(std::string("expected '") + c + "'");
    ++pos;
  }

  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) err("expected a name");
    return s.substr(start, pos - start);
  }

  i64 integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) err("expected an integer");
    return std::stoll(s.substr(start, pos - start));
  }

  std::string path() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && s[pos] != ')') ++pos;
    std::string p = s.substr(start, pos - start);
    while (!p.empty() && isspace(static_cast<unsigned char>(p.back()))) p.pop_back();
    if (p.empty()) err("expected a file path");
    return p;
  }

  Group spec() {
    std::string name = ident();
    expect('(');
    if (name == "cyclic") {
      i64 n = integer();
      expect(')');
      return group_cyclic(n);
    }
    if (name == "metacyclic") {
      i64 m = integer();
      expect(',');
      i64 n = integer();
      expect(',');
      i64 r = integer();
      expect(')');
      return group_metacyclic(m, n, r);
    }
    if (name == "direct") {
      Group a = spec();
      expect(',');
      Group b = spec();
      expect(')');
      return group_direct(a, b);
    }
    if (name == "cayley") {
      std::string p = path();
      expect(')');
      std::ifstream in(p);
      require(in.good(), errc::parse_error, "cannot open Cayley table file: " + p);
      std::vector<int> vals;
      int v;
      while (in >> v) vals.push_back(v);
      size_t n = 1;
      while (n * n < vals.size()) ++n;
      require(n * n == vals.size() && !vals.empty(), errc::parse_error,
              "Cayley table file must hold n*n entries");
      std::vector<std::vector<int>> table(n, std::vector<int>(n));
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) table[i][j] = vals[i * n + j];
      return group_from_cayley(table, "cayley(" + p + ")");
    }
    err("unknown group constructor '" + name + "'");
  }
};

}  // namespace

Group parse_group_spec(const std::string& s) {
  SpecParser p{s};
  Group g = p.spec();
  p.skip_ws();
  require(p.pos == s.size(), errc::parse_error,
          "trailing input at position " + std::to_string(p.pos) + " in '" + s + "'");
  return g;
}

FieldCtxPtr parse_field_spec(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!isspace(static_cast<unsigned char>(c))) t += static_cast<char>(tolower(c));
  require(t.size() > 4 && t.substr(0, 3) == "gf(" && t.back() == ')', errc::parse_error,
          "field spec must look like gf(q) or gf(p^k): " + s);
  std::string body = t.substr(3, t.size() - 4);
  i64 p = 0, k = 1;
  auto caret = body.find('^');
  if (caret != std::string::npos) {
    p = std::stoll(body.substr(0, caret));
    k = std::stoll(body.substr(caret + 1));
  } else {
    i64 q = std::stoll(body);
    auto fs = factorize(q);
    require(fs.size() == 1, errc::parse_error, "field size must be a prime power: " + s);
    p = fs[0].first;
    k = fs[0].second;
  }
  require(is_prime(p) && k >= 1, errc::parse_error, "field size must be a prime power: " + s);
  return FieldCtx::extension(p, static_cast<int>(k));
}

namespace {

std::string indices(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

std::string residues_str(const std::vector<i64>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

ordered_json pair_json(const StrongShodaPair& p) {
  return ordered_json{{"H", p.H.elems},
                      {"K", p.K.elems},
                      {"index", p.m},
                      {"o", p.o},
                      {"E", p.E.elems},
                      {"twisting", p.twisting_trivial ? "trivial" : "nontrivial"}};
}

ordered_json code_json(const LinearCode& c) {
  ordered_json j{{"k", c.k}, {"d", c.d}};
  if (!c.d_exact) j["d_is_upper_bound"] = true;
  if (!c.weights.empty()) j["weights"] = c.weights;
  j["idempotent_index"] = c.prov.idempotent_index;
  j["method"] = c.prov.method;
  if (!c.prov.idempotent_note.empty()) j["note"] = c.prov.idempotent_note;
  return j;
}

const LinearCode* best_code(const CodeSearchReport& rep) {
  const LinearCode* best = nullptr;
  for (const auto& comp : rep.components)
    for (const auto& c : comp.codes) {
      if (c.k == 0) continue;
      if (!best || c.d > best->d || (c.d == best->d && c.k < best->k)) best = &c;
    }
  return best;
}

}  // namespace

RunResult run(const RunConfig& config) {
  require(config.output == "text" || config.output == "json", errc::bad_parameters,
          "output must be text or json");
  require(config.budget >= 1 && config.threads >= 1, errc::bad_parameters,
          "budget and threads must be positive");

  auto t0 = std::chrono::steady_clock::now();
  Group G = parse_group_spec(config.group_spec);
  FieldCtxPtr F = parse_field_spec(config.field_spec);
  ShodaCtx ctx(G, F);

  bool json_mode = config.output == "json";
  ordered_json j{{"group", G.spec}, {"field", F->describe()}, {"ordering", G.labels}};
  std::ostringstream text;
  text << "# group: " << G.spec << " (n=" << G.n << ")\n";
  text << "# field: " << F->describe() << "\n";
  text << "# ordering:";
  for (const auto& l : G.labels) text << " " << l;
  text << "\n";
  int exit_code = 0;

  auto elapsed_ms = [&]() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
  };

  if (config.command == "ssp") {
    auto entries = strong_shoda_pairs(ctx);
    ordered_json arr = ordered_json::array();
    for (const auto& e : entries) {
      const auto& p = *e.pair;
      text << "H=" << indices(p.H.elems) << " K=" << indices(p.K.elems) << " [H:K]=" << p.m
           << " o=" << p.o << " E=" << indices(p.E.elems)
           << " twisting=" << (p.twisting_trivial ? "trivial" : "nontrivial") << "\n";
      arr.push_back(pair_json(p));
    }
    j["pairs"] = arr;
  } else if (config.command == "wedderburn") {
    auto rep = wedderburn_report(ctx);
    ordered_json arr = ordered_json::array();
    for (const auto& c : rep.components) {
      text << "component H=" << indices(c.pair->H.elems) << " K=" << indices(c.pair->K.elems)
           << " class=" << residues_str(c.cls.residues) << " matrix_size=" << c.matrix_size
           << " field_order=" << c.field_order << " dim=" << c.component_dim << "\n";
      ordered_json cj{{"pair", pair_json(*c.pair)},
                      {"class", c.cls.residues},
                      {"matrix_size", c.matrix_size},
                      {"field_order", c.field_order},
                      {"dim", c.component_dim}};
      arr.push_back(cj);
    }
    text << "total_dim=" << rep.dim_sum << " complete=" << (rep.complete ? "yes" : "no")
         << " orthogonal=" << (rep.orthogonal ? "yes" : "no") << "\n";
    j["components"] = arr;
    j["total_dim"] = rep.dim_sum;
    j["complete"] = rep.complete;
    j["orthogonal"] = rep.orthogonal;
  } else {
    bool want_codes = config.command == "codes" || config.command == "search";
    require(want_codes || config.command == "idempotents", errc::bad_parameters,
            "unknown command: " + config.command);
    auto strategy = want_codes ? SearchStrategy::all_minimal_ideals
                               : SearchStrategy::all_idempotents;
    CodeSearchReport rep =
        code_search(ctx, strategy, config.budget, config.threads, want_codes, want_codes);

    ordered_json arr = ordered_json::array();
    for (const auto& comp : rep.components) {
      ordered_json cj{{"pair", pair_json(*comp.pair)},
                      {"class", comp.cls.residues},
                      {"matrix_size", comp.matrix_size},
                      {"field_order", comp.field_order}};
      text << "component H=" << indices(comp.pair->H.elems)
           << " K=" << indices(comp.pair->K.elems)
           << " class=" << residues_str(comp.cls.residues)
           << " matrix_size=" << comp.matrix_size << " field_order=" << comp.field_order;
      if (!comp.supported) {
        text << " skipped: " << comp.skip_reason << "\n";
        cj["supported"] = false;
        cj["skip_reason"] = comp.skip_reason;
        cj["codes"] = ordered_json::array();
        arr.push_back(cj);
        continue;
      }
      text << "\n";
      ordered_json codes = ordered_json::array();
      if (config.command == "idempotents") {
        for (const auto& ps : comp.sets) {
          for (size_t i = 0; i < ps.idems.size(); ++i) {
            text << "idempotent " << i << " method=" << ps.method << " ["
                 << ps.provenance[i] << "]: " << to_string(ps.idems[i]) << "\n";
            codes.push_back(ordered_json{{"index", i},
                                         {"method", ps.method},
                                         {"provenance", ps.provenance[i]},
                                         {"value", to_string(ps.idems[i])}});
          }
        }
        cj["idempotents"] = codes;
      } else {
        for (const auto& c : comp.codes) {
          text << "code [" << c.length << "," << c.k << "," << c.d << "]"
               << (c.d_exact ? "" : " (d is an upper bound)")
               << " idempotent=" << c.prov.idempotent_index << " method=" << c.prov.method;
          if (!c.weights.empty()) text << " weights=" << residues_str(c.weights);
          text << "\n";
          codes.push_back(code_json(c));
        }
        cj["codes"] = codes;
        if (comp.survey.lines > 0) {
          ordered_json srows = ordered_json::array();
          for (const auto& row : comp.survey.rows) {
            text << "ideal-survey k=" << row.k << " d=" << row.d << " count=" << row.count
                 << " repr=" << row.repr_line << "\n";
            srows.push_back(ordered_json{
                {"k", row.k}, {"d", row.d}, {"count", row.count}, {"repr", row.repr_line}});
          }
          cj["survey"] = ordered_json{{"lines", comp.survey.lines}, {"rows", srows}};
        } else if (!comp.survey_skip_reason.empty()) {
          text << "ideal-survey skipped: " << comp.survey_skip_reason << "\n";
          cj["survey_skip_reason"] = comp.survey_skip_reason;
        }
      }
      arr.push_back(cj);
    }
    j["components"] = arr;
    if (!rep.any_supported && !rep.components.empty()) exit_code = 2;

    if (config.command == "search") {
      std::map<int, i64> best_by_k;
      for (const auto& comp : rep.components)
        for (const auto& c : comp.codes) {
          if (c.k == 0 || !c.d_exact) continue;
          auto it = best_by_k.find(c.k);
          if (it == best_by_k.end() || c.d > it->second) best_by_k[c.k] = c.d;
        }
      ordered_json rows = ordered_json::array();
      for (const auto& [k, d] : best_by_k) {
        text << "row group=" << G.spec << " k=" << k << " d=" << d
             << " time_ms=" << elapsed_ms() << "\n";
        rows.push_back(ordered_json{{"group", G.spec}, {"k", k}, {"d", d}});
      }
      j["best"] = rows;
    }

    if (!config.export_path.empty() && want_codes) {
      const LinearCode* best = best_code(rep);
      require(best != nullptr, errc::bad_parameters, "no code to export");
      std::ofstream out(config.export_path);
      require(out.good(), errc::bad_parameters, "cannot write " + config.export_path);
      out << export_genmat(*best);
    }
  }

  RunResult res;
  res.exit_code = exit_code;
  res.out = json_mode ? j.dump(2) + "\n" : text.str();
  return res;
}

}  // namespace idemcodes
