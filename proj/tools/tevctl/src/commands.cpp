#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <thread>

namespace tevctl {
namespace {

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c) != 0; });
}

template <typename Fn>
void fan_out(std::size_t count, int workers, Fn fn) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  const auto n = std::min<std::size_t>(static_cast<std::size_t>(workers), count);
  for (std::size_t w = 0; w < n; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

std::int64_t parse_int(const std::string& s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("not an integer: '" + s + "'");
  }
  return v;
}

std::string lemma_label(const tev::LemmaResult& l) {
  return "r=" + std::to_string(l.r) + " ell=" + std::to_string(l.ell) + " m=" + std::to_string(l.m) +
         " d=" + std::to_string(l.d) + " k=" + std::to_string(l.k);
}

// One row per compared value, shared by the grid and lemma outputs.
struct Row {
  std::string instance;
  std::vector<std::pair<std::string, std::string>> values;  // engine, value
  std::string verdict;
  std::string reason;
};

std::vector<Row> rows_from_grid(const std::vector<tev::CheckResult>& results) {
  std::vector<Row> rows;
  rows.reserve(results.size());
  for (const auto& res : results) {
    Row row{tev::describe(res.instance), {}, std::string(tev::to_string(res.verdict)), res.reason};
    for (const auto& ev : res.values) {
      row.values.emplace_back(std::string(tev::engine_name(ev.engine)),
                              ev.value ? tev::to_decimal(*ev.value) : "error: " + ev.error);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Row> rows_from_lemma(const std::vector<tev::LemmaResult>& results) {
  std::vector<Row> rows;
  for (const auto& l : results) {
    Row row{lemma_label(l),
            {{"qh", tev::to_decimal(l.computed)}, {"binom", tev::to_decimal(l.predicted)}},
            l.agree() ? "agree" : "disagree",
            l.agree() ? "" : "ring value differs from binom(ell-d-m-1, k)"};
    rows.push_back(std::move(row));
  }
  return rows;
}

int emit_rows(const std::string& title, const std::vector<Row>& rows, Format format, std::ostream& out) {
  std::size_t agree = 0, disagree = 0, skipped = 0;
  std::map<std::string, std::size_t> per_engine;
  for (const auto& row : rows) {
    if (row.verdict == "agree") ++agree;
    else if (row.verdict == "disagree") ++disagree;
    else ++skipped;
    for (const auto& [engine, value] : row.values) ++per_engine[engine];
  }

  switch (format) {
    case Format::Csv:
      out << csv_header() << "\n";
      for (const auto& row : rows) {
        if (row.values.empty()) out << csv_escape(row.instance) << ",,," << row.verdict << "\n";
        for (const auto& [engine, value] : row.values) {
          out << csv_escape(row.instance) << "," << engine << "," << csv_escape(value) << "," << row.verdict << "\n";
        }
      }
      break;
    case Format::Json: {
      for (const auto& row : rows) {
        Json j;
        j["instance"] = row.instance;
        Json values = Json::object();
        for (const auto& [engine, value] : row.values) values[engine] = value;
        j["values"] = values;
        j["verdict"] = row.verdict;
        if (!row.reason.empty()) j["reason"] = row.reason;
        out << j.dump() << "\n";
      }
      Json summary;
      summary["grid"] = title;
      summary["instances"] = std::to_string(rows.size());
      summary["agree"] = std::to_string(agree);
      summary["disagree"] = std::to_string(disagree);
      summary["skipped"] = std::to_string(skipped);
      Json engines = Json::object();
      for (const auto& [engine, count] : per_engine) engines[engine] = std::to_string(count);
      summary["engines"] = engines;
      out << Json{{"summary", summary}}.dump() << "\n";
      break;
    }
    case Format::Plain:
      out << "grid: " << title << "\n";
      out << "instances: " << rows.size() << "  agree: " << agree << "  disagree: " << disagree
          << "  skipped: " << skipped << "\n";
      out << "engine evaluations:\n";
      for (const auto& [engine, count] : per_engine) out << "  " << engine << ": " << count << "\n";
      out << "disagreements: " << disagree << "\n";
      for (const auto& row : rows) {
        if (row.verdict != "disagree") continue;
        out << "DISAGREE " << row.instance << ":";
        for (const auto& [engine, value] : row.values) out << " " << engine << "=" << value;
        out << " (" << row.reason << ")\n";
      }
      break;
  }
  return disagree == 0 ? kOk : kInconsistent;
}

}  // namespace

int cmd_compute(const ComputeRequest& req, Format format, std::ostream& out, std::ostream& err) {
  tev::EngineContext context;
  const ComputeOutcome outcome = run_compute(req, &context);
  out << render(outcome, format);
  if (!outcome.diagnostic.empty()) err << "tevctl: " << outcome.diagnostic << "\n";
  return outcome.exit_code;
}

std::vector<Json> run_batch_lines(const std::vector<std::string>& lines, int parallel, int* exit_code) {
  std::vector<std::size_t> line_no;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (!blank(lines[i])) line_no.push_back(i + 1);
  }
  std::vector<Json> records(line_no.size());
  std::vector<int> codes(line_no.size(), kOk);
  tev::EngineContext context;
  fan_out(line_no.size(), parallel, [&](std::size_t idx) {
    const std::string& text = lines[line_no[idx] - 1];
    try {
      const ComputeRequest req = request_from_json(Json::parse(text));
      ComputeOutcome outcome = run_compute(req, &context);
      codes[idx] = outcome.exit_code;
      records[idx] = std::move(outcome.record);
    } catch (const std::exception& e) {
      // Malformed input becomes data, never an abort.
      Json j;
      j["line"] = std::to_string(line_no[idx]);
      j["error"] = e.what();
      j["code"] = "MalformedInput";
      j["input"] = text;
      records[idx] = std::move(j);
    }
  });
  if (exit_code != nullptr) {
    *exit_code = std::any_of(codes.begin(), codes.end(), [](int c) { return c == kInconsistent; }) ? kInconsistent
                                                                                                     : kOk;
  }
  return records;
}

int cmd_batch(const BatchOptions& opts, std::ostream& out, std::ostream& err) {
  std::ifstream in(opts.input);
  if (!in) {
    err << "tevctl: cannot read " << opts.input << "\n";
    return kIo;
  }
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  if (in.bad()) {
    err << "tevctl: read error on " << opts.input << "\n";
    return kIo;
  }

  int status = kOk;
  const std::vector<Json> records = run_batch_lines(lines, std::max(1, opts.parallel), &status);

  std::ofstream file;
  std::ostream* sink = &out;
  if (opts.output) {
    file.open(*opts.output);
    if (!file) {
      err << "tevctl: cannot write " << *opts.output << "\n";
      return kIo;
    }
    sink = &file;
  }
  for (const auto& rec : records) *sink << rec.dump() << "\n";
  sink->flush();
  if (!*sink) {
    err << "tevctl: write error\n";
    return kIo;
  }
  if (status != kOk) err << "tevctl: at least one record reports disagreeing engines\n";
  return status;
}

std::vector<std::string> preset_names() { return {"l1-small", "genus0-small", "r2l2", "qh-lemma"}; }

std::optional<tev::GridSpec> preset_grid(const std::string& name) {
  tev::GridSpec spec;
  if (name == "l1-small") {
    spec.r = {2, 2};
    spec.ell = {1, 1};
    spec.g = {0, 1};
    spec.k = {0, 2};
    spec.d = {0, 20};
  } else if (name == "genus0-small") {
    spec.r = {2, 3};
    spec.ell = {0, 4};
    spec.g = {0, 0};
    spec.k = {0, 2};
    spec.d = {0, 12};
  } else if (name == "r2l2") {
    spec.r = {2, 2};
    spec.ell = {2, 2};
    spec.g = {0, 2};
    spec.k = {1, 2};
    spec.d = {0, 30};
  } else {
    return std::nullopt;
  }
  return spec;
}

tev::Range parse_range(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) {
    const std::int64_t v = parse_int(s);
    return {v, v};
  }
  return {parse_int(s.substr(0, colon)), parse_int(s.substr(colon + 1))};
}

int cmd_crosscheck(const CrosscheckOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.grid && *opts.grid == "qh-lemma") {
    return emit_rows("qh-lemma", rows_from_lemma(tev::run_lemma_grid({2, 3}, 15)), opts.format, out);
  }

  tev::GridSpec spec;
  std::string title;
  if (opts.grid) {
    auto preset = preset_grid(*opts.grid);
    if (!preset) {
      err << "tevctl: unknown grid preset '" << *opts.grid << "' (known:";
      for (const auto& n : preset_names()) err << " " << n;
      err << ")\n";
      return kUsage;
    }
    spec = *preset;
    title = *opts.grid;
  } else {
    title = "custom";
  }
  try {
    if (opts.r) spec.r = parse_range(*opts.r);
    if (opts.g) spec.g = parse_range(*opts.g);
    if (opts.ell) spec.ell = parse_range(*opts.ell);
    if (opts.k) spec.k = parse_range(*opts.k);
    if (opts.d) spec.d = parse_range(*opts.d);
  } catch (const std::exception& e) {
    err << "tevctl: " << e.what() << "\n";
    return kUsage;
  }
  for (const auto& name : opts.engines) {
    auto e = tev::engine_from_name(name);
    if (!e) {
      err << "tevctl: unknown engine '" << name << "'\n";
      return kUsage;
    }
    spec.engines.insert(*e);
  }
  spec.parallel = std::max(1, opts.parallel);
  if (title == "custom") {
    auto rs = [](const tev::Range& x) { return std::to_string(x.lo) + ":" + std::to_string(x.hi); };
    title = "r=" + rs(spec.r) + " ell=" + rs(spec.ell) + " g=" + rs(spec.g) + " k=" + rs(spec.k) + " d=" + rs(spec.d);
  }
  return emit_rows(title, rows_from_grid(tev::run_grid(spec)), opts.format, out);
}

}  // namespace tevctl
