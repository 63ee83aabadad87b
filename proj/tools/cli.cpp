#include "cli.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "irank/irank.hpp"

namespace irank::cli {
namespace {

using nlohmann::json;

struct Options {
  std::string file;
  std::string format = "json";
  std::size_t h_max = 0;  // 0: exact bound
  std::size_t split_cap = 16;
  bool witness = false;
  bool transpose = false;
  std::uint64_t seed = 42;
  std::size_t samples = 1000;
  std::size_t vertex_cap = 20;
};

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return os.str();
}

IntervalMatrix load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_matrix_file(buf.str());
}

std::optional<std::size_t> h_cap(const Options& o) {
  return o.h_max == 0 ? std::nullopt : std::optional<std::size_t>(o.h_max);
}

json entries_json(const std::vector<std::size_t>& v) { return json(v); }

json tuple_json(const TupleFamily& t) {
  return json{{"h", t.h}, {"rows", t.rows}, {"cols", t.cols}, {"sigma", t.sigma}};
}

json sign_case_json(const SignCase& c) {
  json splits = json::array();
  for (const auto& [e, choice] : c.split_choices)
    splits.push_back({{"row", e.row}, {"col", e.col}, {"choice", choice == SplitChoice::Lower ? "lower" : "upper"}});
  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 0; i < c.row_flips.size(); ++i)
    if (c.row_flips[i]) rows.push_back(i);
  for (std::size_t j = 0; j < c.col_flips.size(); ++j)
    if (c.col_flips[j]) cols.push_back(j);
  return json{{"splits", splits}, {"flipped_rows", rows}, {"flipped_cols", cols}};
}

// Flattens a JSON report into "path: value" lines.
void flatten(const json& v, const std::string& path, std::ostream& out) {
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) flatten(x, path.empty() ? k : path + "." + k, out);
  } else if (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array()) &&
             !(v.front().is_array() && !v.front().empty() && !v.front().front().is_structured())) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out << path << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
}

struct Report {
  json body;
  std::string headline;
  int code = kOk;
};

void emit(const Options& o, const Report& r, std::ostream& out) {
  if (o.format == "text") {
    out << r.headline << "\n";
    flatten(r.body, "", out);
  } else {
    out << r.body.dump(2) << "\n";
  }
}

json base_report(const std::string& command, const IntervalMatrix& mu, const Options& o) {
  json caps{{"h_max", o.h_max == 0 ? json("exact") : json(o.h_max)}, {"split_cap", o.split_cap}};
  return json{{"command", command},
              {"input_digest", "sha256:" + sha256_hex(serialize_matrix_file(mu))},
              {"rows", mu.rows()},
              {"cols", mu.cols()},
              {"caps", caps}};
}

Report cmd_rk01(const IntervalMatrix& mu, const Options& o) {
  Report r;
  r.body = base_report("rk01", mu, o);
  json result;
  std::string verdict;
  if (mrk_is_zero(mu)) {
    verdict = "MRK=0";
    result["decided_by"] = "every entry contains 0";
  } else {
    const RankOneResult one = contains_rank_one(mu, {h_cap(o), o.split_cap, o.witness});
    verdict = one.contains ? "MRK=1" : "MRK>1";
    result["decided_by"] = one.decided_by;
    result["reduction"] = {{"kept_rows", entries_json(one.reduced.kept_rows)},
                           {"kept_cols", entries_json(one.reduced.kept_cols)}};
    result["split_cases"] = one.cases.size();
    json cases = json::array();
    for (const auto& c : one.cases) {
      json jc = sign_case_json(c.sign_case);
      if (c.clamp.rules_out_rank_one()) {
        jc["verdict"] = "no rank-one member";
        jc["negative_entry"] = {c.clamp.negative_entry->row, c.clamp.negative_entry->col};
      } else if (c.check) {
        jc["verdict"] = c.check->holds ? "inequalities hold" : "inequality violated";
        jc["h_max"] = c.check->h_max;
        if (c.check->violation) jc["violation"] = tuple_json(*c.check->violation);
      }
      cases.push_back(std::move(jc));
    }
    result["cases"] = std::move(cases);
    if (one.witness) r.body["witness"] = point_matrix_to_json(*one.witness);
    if (one.contains && !one.conclusive) {
      result["inconclusive"] = true;
      r.code = kInconclusive;
    }
  }
  result["verdict"] = verdict;
  r.body["result"] = std::move(result);
  r.headline = verdict;
  return r;
}

Report cmd_mrk(const IntervalMatrix& input, const Options& o) {
  IntervalMatrix mu = input;
  bool transposed = false;
  if (mu.cols() > 3) {
    if (!o.transpose || mu.rows() > 3)
      throw ScopeError("minimal rank needs at most 3 columns (use --transpose when rows <= 3)");
    mu = mu.transpose();
    transposed = true;
  }
  Report r;
  r.body = base_report("mrk", input, o);
  const MinRankResult res = min_rank_3col(mu, {h_cap(o), o.split_cap});
  json result{{"mrk", res.rank}, {"decided_by", res.decided_by}, {"transposed", transposed},
              {"split_cases", res.cases}};
  if (res.dependency) {
    const auto& d = *res.dependency;
    result["dependency"] = {{"v", d.v}, {"w", d.w}, {"sign_case", d.sign_case},
                            {"lambda", to_string(d.lambda)}, {"gamma", to_string(d.gamma)}};
  }
  if (res.witness && (o.witness || (res.rank >= 1 && res.rank <= 2)))
    r.body["witness"] = point_matrix_to_json(transposed ? res.witness->transpose() : *res.witness);
  if (!res.conclusive) {
    result["inconclusive"] = true;
    r.code = kInconclusive;
  }
  r.body["result"] = std::move(result);
  r.headline = "mrk = " + std::to_string(res.rank);
  return r;
}

Report cmd_maxrank(const IntervalMatrix& mu, const Options& o) {
  Report r;
  r.body = base_report("maxrank", mu, o);
  const MaxRankResult res = max_rank_with_witness(mu);
  r.body["result"] = {{"max_rank", res.rank}, {"submatrix_rows", res.rows}, {"submatrix_cols", res.cols}};
  if (o.witness) r.body["witness"] = point_matrix_to_json(res.witness);
  r.headline = "Mrk = " + std::to_string(res.rank);
  return r;
}

Report cmd_range(const IntervalMatrix& input, const Options& o) {
  Report r;
  r.body = base_report("range", input, o);
  IntervalMatrix mu = input;
  bool transposed = false;
  if (mu.cols() > 3 && o.transpose && mu.rows() <= 3) {
    mu = mu.transpose();
    transposed = true;
  }
  json result;
  if (mu.cols() <= 3) {
    const RankRangeResult res = rank_range(mu, {h_cap(o), o.split_cap});
    result = {{"status", "EXACT"}, {"mrk", res.range.min}, {"max_rank", res.range.max}, {"transposed", transposed}};
    if (o.witness) {
      auto back = [&](const PointMatrix& a) { return point_matrix_to_json(transposed ? a.transpose() : a); };
      if (res.min_witness) r.body["min_witness"] = back(*res.min_witness);
      r.body["max_witness"] = back(res.max_witness);
    }
    if (!res.conclusive) {
      result["inconclusive"] = true;
      r.code = kInconclusive;
    }
    r.headline = "rank range = [" + std::to_string(res.range.min) + ", " + std::to_string(res.range.max) + "]";
  } else {
    // Wider matrices: the maximal rank is exact, the minimal rank only when
    // it is 0 or 1, or when it is squeezed by a maximal rank of at most 2.
    const std::size_t top = max_rank(mu);
    std::size_t low = 2;
    bool exact = false;
    bool conclusive = true;
    if (mrk_is_zero(mu)) {
      low = 0;
      exact = true;
    } else {
      const RankOneResult one = contains_rank_one(mu, {h_cap(o), o.split_cap, false});
      conclusive = one.conclusive;
      if (one.contains) {
        low = 1;
        exact = true;
      } else if (top <= 2) {
        exact = true;
      }
    }
    result = {{"status", exact ? "EXACT" : "PARTIAL"}, {"max_rank", top}, {"transposed", false}};
    if (exact) {
      result["mrk"] = low;
      r.headline = "rank range = [" + std::to_string(low) + ", " + std::to_string(top) + "]";
    } else {
      result["mrk_candidates"] = {2, top};
      r.headline = "PARTIAL: mrk in [2, " + std::to_string(top) + "], Mrk = " + std::to_string(top);
    }
    if (!conclusive) {
      result["inconclusive"] = true;
      r.code = kInconclusive;
    }
  }
  r.body["result"] = std::move(result);
  return r;
}

Report cmd_oracle(const std::string& which, const IntervalMatrix& mu, const Options& o) {
  Report r;
  r.body = base_report("oracle " + which, mu, o);
  r.body["caps"]["vertex_cap"] = o.vertex_cap;
  if (which == "vertex-mrk") {
    const std::size_t v = oracle::vertex_max_rank(mu, o.vertex_cap);
    r.body["result"] = {{"max_rank", v}};
    r.headline = "vertex Mrk = " + std::to_string(v);
  } else if (which == "rank1-log") {
    const auto f = oracle::rank1_feasible_log(mu);
    r.body["result"] = {{"rank_one", f.has_value()}};
    if (f) r.body["witness"] = point_matrix_to_json(f->matrix);
    r.headline = f ? "rank-one member exists" : "no rank-one member";
  } else {
    const auto b = oracle::sample_rank_bounds(mu, o.samples, o.seed);
    r.body["result"] = {{"mrk_upper_bound", b.min_rank_upper},
                        {"max_rank_lower_bound", b.max_rank_lower},
                        {"samples", b.samples},
                        {"seed", o.seed}};
    r.headline = "sampled ranks in [" + std::to_string(b.min_rank_upper) + ", " +
                 std::to_string(b.max_rank_lower) + "]";
  }
  return r;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("file", o.file, "JSON matrix file")->required();
  sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--h-max", o.h_max, "cap on the tuple size of the rank-one criterion (0: exact)");
  sub->add_option("--split-cap", o.split_cap, "maximum number of straddling entries to split");
  sub->add_flag("--witness", o.witness, "include member matrices attaining the result");
  sub->add_flag("--transpose", o.transpose, "transpose wide matrices with at most 3 rows");
  sub->add_option("--seed", o.seed, "seed for sampling");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank range of interval matrices with exact rational arithmetic", "irank"};
  app.require_subcommand(1);
  Options o;
  auto* rk01 = app.add_subcommand("rk01", "decide whether the minimal rank is 0, 1 or greater");
  auto* mrk = app.add_subcommand("mrk", "minimal rank of a matrix with at most 3 columns");
  auto* maxrank = app.add_subcommand("maxrank", "maximal rank of the members");
  auto* range = app.add_subcommand("range", "rank range [minimal, maximal]");
  auto* orc = app.add_subcommand("oracle", "brute-force referees");
  for (auto* sub : {rk01, mrk, maxrank, range}) add_common(sub, o);
  std::string which;
  orc->add_option("which", which, "vertex-mrk | rank1-log | sample")
      ->required()
      ->check(CLI::IsMember({"vertex-mrk", "rank1-log", "sample"}));
  add_common(orc, o);
  orc->add_option("--samples", o.samples, "random members for sample");
  orc->add_option("--vertex-cap", o.vertex_cap, "maximum nonconstant entries for vertex-mrk");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "irank: " << e.what() << "\n";
    return kParseError;
  }

  const auto start = std::chrono::steady_clock::now();
  IntervalMatrix mu;
  try {
    mu = load(o.file);
  } catch (const ParseError& e) {
    err << "irank: " << e.what() << "\n";
    return kParseError;
  } catch (const PreconditionError& e) {
    err << "irank: " << e.what() << "\n";
    return kParseError;
  }

  Report r;
  try {
    if (rk01->parsed()) r = cmd_rk01(mu, o);
    else if (mrk->parsed()) r = cmd_mrk(mu, o);
    else if (maxrank->parsed()) r = cmd_maxrank(mu, o);
    else if (range->parsed()) r = cmd_range(mu, o);
    else r = cmd_oracle(which, mu, o);
  } catch (const CapExceededError& e) {
    r.body = base_report(app.get_subcommands().front()->get_name(), mu, o);
    r.body["result"] = {{"status", "inconclusive"}, {"reason", e.what()}};
    r.headline = "inconclusive";
    r.code = kInconclusive;
    err << "irank: " << e.what() << "\n";
  } catch (const ScopeError& e) {
    err << "irank: out of method scope: " << e.what() << "\n";
    return kScopeError;
  } catch (const PreconditionError& e) {
    err << "irank: out of method scope: " << e.what() << "\n";
    return kScopeError;
  }
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
  r.body["timing_ms"] = elapsed.count();
  emit(o, r, out);
  return r.code;
}

}  // namespace irank::cli
