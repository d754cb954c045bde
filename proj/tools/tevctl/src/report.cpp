#include "report.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "tevelev/errors.hpp"

namespace tevctl {
namespace {

bool is_tev_engine(tev::Engine e) { return !tev::computes_virtual(e); }

Json regime_json(const tev::RegimeReport& rep) {
  Json j;
  j["balanced"] = rep.balanced;
  j["strong_inequality"] = rep.strong_inequality;
  j["geometric_range"] = rep.geometric_range;
  j["virtual_range"] = rep.virtual_range;
  j["sae"] = std::string(tev::to_string(rep.sae));
  Json engines = Json::array();
  for (tev::Engine e : rep.engines_available) engines.push_back(std::string(tev::engine_name(e)));
  j["engines"] = engines;
  return j;
}

std::string regime_shortfall(const tev::RegimeReport& rep) {
  std::string why;
  auto add = [&](const char* s) { why += why.empty() ? s : std::string("; ") + s; };
  if (!rep.strong_inequality) add("strong inequality fails");
  if (!rep.geometric_range) add("n-d < g+1");
  if (!rep.virtual_range) add("n-d < 1");
  return why.empty() ? "no requested engine covers this class" : why;
}

std::int64_t json_integer(const Json& j, const char* key) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    std::int64_t v = 0;
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec == std::errc() && ptr == end && !s.empty()) return v;
  }
  throw std::invalid_argument(std::string("field '") + key + "' is not an integer");
}

int json_small(const Json& j, const char* key) {
  const std::int64_t v = json_integer(j, key);
  if (v < -1000000 || v > 1000000) throw std::invalid_argument(std::string("field '") + key + "' out of range");
  return static_cast<int>(v);
}

std::string instance_label(const Json& rec) {
  std::ostringstream os;
  os << "r=" << rec.value("r", "?") << " g=" << rec.value("g", "?");
  if (rec.contains("n")) os << " n=" << rec["n"].get<std::string>();
  os << " d=" << rec.value("d", "?") << " k=[";
  if (rec.contains("k")) {
    bool first = true;
    for (const auto& x : rec["k"]) {
      os << (first ? "" : " ") << x.get<std::string>();
      first = false;
    }
  }
  os << "]";
  return os.str();
}

}  // namespace

std::optional<Kind> kind_from_name(const std::string& s) {
  if (s == "tev") return Kind::Tev;
  if (s == "vtev") return Kind::Vtev;
  if (s == "both") return Kind::Both;
  return std::nullopt;
}

std::optional<EngineChoice> engine_choice_from_name(const std::string& s) {
  if (s == "auto") return EngineChoice::Auto;
  if (s == "grr") return EngineChoice::Grr;
  if (s == "closed") return EngineChoice::Closed;
  if (s == "residue") return EngineChoice::Residue;
  if (s == "qh") return EngineChoice::Qh;
  return std::nullopt;
}

std::optional<Format> format_from_name(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "plain") return Format::Plain;
  return std::nullopt;
}

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::Tev: return "tev";
    case Kind::Vtev: return "vtev";
    case Kind::Both: return "both";
  }
  return "both";
}

static std::string choice_name(EngineChoice c) {
  switch (c) {
    case EngineChoice::Auto: return "auto";
    case EngineChoice::Grr: return "grr";
    case EngineChoice::Closed: return "closed";
    case EngineChoice::Residue: return "residue";
    case EngineChoice::Qh: return "qh";
  }
  return "auto";
}

std::set<tev::Engine> select_engines(Kind kind, EngineChoice choice) {
  using tev::Engine;
  std::set<Engine> pool;
  switch (choice) {
    case EngineChoice::Auto:
      pool = {Engine::Grr,       Engine::Residue,   Engine::ClosedGenus0,      Engine::ClosedL1, Engine::ClosedR2L2,
              Engine::ClosedP1,  Engine::VirtualL1, Engine::QuantumCohomology, Engine::VirtualPr};
      break;
    case EngineChoice::Grr: pool = {Engine::Grr}; break;
    case EngineChoice::Residue: pool = {Engine::Residue}; break;
    case EngineChoice::Qh: pool = {Engine::QuantumCohomology}; break;
    case EngineChoice::Closed:
      pool = {Engine::ClosedGenus0, Engine::ClosedL1, Engine::ClosedR2L2,
              Engine::ClosedP1,     Engine::VirtualL1, Engine::VirtualPr};
      break;
  }
  std::set<Engine> out;
  for (Engine e : pool) {
    const bool tev_side = is_tev_engine(e);
    if (kind == Kind::Both || (kind == Kind::Tev) == tev_side) out.insert(e);
  }
  return out;
}

ComputeOutcome run_compute(const ComputeRequest& req, tev::EngineContext* context) {
  ComputeOutcome out;
  Json& rec = out.record;
  rec["r"] = std::to_string(req.r);
  rec["g"] = std::to_string(req.g);
  rec["d"] = std::to_string(req.d);
  Json k = Json::array();
  for (auto ki : req.k) k.push_back(std::to_string(ki));
  rec["k"] = k;
  if (req.n) rec["n"] = std::to_string(*req.n);
  rec["kind"] = kind_name(req.kind);
  rec["engine"] = choice_name(req.engine);

  auto fail = [&](int code, const std::string& error_code, const std::string& msg) {
    out.exit_code = code;
    out.diagnostic = msg;
    rec["error"] = msg;
    rec["code"] = error_code;
    return out;
  };

  tev::ValidatedProblem vp;
  try {
    vp = tev::validate(req.r, req.g, tev::CurveClass{req.d, req.k}, req.n);
  } catch (const tev::Error& e) {
    return fail(kUsage, std::string(tev::to_string(e.code())), e.what());
  }
  rec["n"] = std::to_string(vp.problem.n);
  rec["n_derived"] = !req.n.has_value();
  rec["regime"] = regime_json(vp.regime);

  const std::set<tev::Engine> selected = select_engines(req.kind, req.engine);
  if (selected.empty()) {
    return fail(kUsage, "Unsupported",
                "engine " + choice_name(req.engine) + " does not compute " + kind_name(req.kind));
  }
  std::set<tev::Engine> runnable;
  for (tev::Engine e : selected) {
    if (vp.regime.available(e)) runnable.insert(e);
  }
  if (runnable.empty()) {
    return fail(kUsage, "RegimeViolation", "RegimeViolation: no applicable engine (" + regime_shortfall(vp.regime) + ")");
  }

  tev::CheckResult res = tev::check_instance(vp, runnable, context);
  Json values = Json::array();
  std::optional<std::string> tev_value;
  std::optional<std::string> vtev_value;
  std::string engine_failure;
  for (const auto& ev : res.values) {
    Json v;
    v["engine"] = std::string(tev::engine_name(ev.engine));
    v["kind"] = is_tev_engine(ev.engine) ? "tev" : "vtev";
    if (ev.value) {
      const std::string s = tev::to_decimal(*ev.value);
      v["value"] = s;
      auto& slot = is_tev_engine(ev.engine) ? tev_value : vtev_value;
      if (!slot) slot = s;
    } else {
      v["error"] = ev.error;
      if (engine_failure.empty()) engine_failure = std::string(tev::engine_name(ev.engine)) + ": " + ev.error;
    }
    if (tev::is_conditional(ev.engine)) v["conditional"] = true;
    values.push_back(v);
  }
  rec["values"] = values;
  if (req.kind != Kind::Vtev) rec["tev"] = tev_value ? Json(*tev_value) : Json(nullptr);
  if (req.kind != Kind::Tev) rec["vtev"] = vtev_value ? Json(*vtev_value) : Json(nullptr);
  if (req.engine == EngineChoice::Auto) {
    rec["verdict"] = std::string(tev::to_string(res.verdict));
    if (!res.reason.empty()) rec["reason"] = res.reason;
  }
  out.result = std::move(res);

  if (!engine_failure.empty()) {
    out.exit_code = kInconsistent;
    out.diagnostic = "engine failed: " + engine_failure;
  } else if (out.result->verdict == tev::Verdict::Disagree) {
    out.exit_code = kInconsistent;
    out.diagnostic = "engines disagree on " + tev::describe(vp.problem) + ": " + out.result->reason;
  }
  return out;
}

ComputeRequest request_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("record is not a JSON object");
  for (const char* key : {"r", "g", "d", "k"}) {
    if (!j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  }
  ComputeRequest req;
  req.r = json_small(j["r"], "r");
  req.g = json_small(j["g"], "g");
  req.d = json_integer(j["d"], "d");
  const Json& k = j["k"];
  if (!k.is_array()) throw std::invalid_argument("field 'k' is not an array");
  for (const auto& x : k) req.k.push_back(json_integer(x, "k"));
  if (j.contains("n") && !j["n"].is_null()) req.n = json_integer(j["n"], "n");
  if (j.contains("kind")) {
    if (!j["kind"].is_string()) throw std::invalid_argument("field 'kind' is not a string");
    auto kind = kind_from_name(j["kind"].get<std::string>());
    if (!kind) throw std::invalid_argument("unknown kind '" + j["kind"].get<std::string>() + "'");
    req.kind = *kind;
  }
  if (j.contains("engine")) {
    if (!j["engine"].is_string()) throw std::invalid_argument("field 'engine' is not a string");
    auto e = engine_choice_from_name(j["engine"].get<std::string>());
    if (!e) throw std::invalid_argument("unknown engine '" + j["engine"].get<std::string>() + "'");
    req.engine = *e;
  }
  return req;
}

std::vector<std::int64_t> parse_k_list(const std::string& s) {
  std::vector<std::int64_t> out;
  if (s.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = s.find(',', pos);
    const std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw std::invalid_argument("bad k entry '" + item + "'");
    }
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string csv_header() { return "instance,engine,value,verdict"; }

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render(const ComputeOutcome& outcome, Format format) {
  const Json& rec = outcome.record;
  std::ostringstream os;
  switch (format) {
    case Format::Json:
      os << rec.dump() << "\n";
      break;
    case Format::Csv: {
      os << csv_header() << "\n";
      const std::string label = csv_escape(instance_label(rec));
      if (rec.contains("error")) {
        os << label << ",,," << csv_escape("error: " + rec["error"].get<std::string>()) << "\n";
        break;
      }
      const std::string verdict = rec.value("verdict", "");
      for (const auto& v : rec["values"]) {
        os << label << "," << v["engine"].get<std::string>() << ","
           << csv_escape(v.contains("value") ? v["value"].get<std::string>() : "error: " + v["error"].get<std::string>())
           << "," << verdict << "\n";
      }
      break;
    }
    case Format::Plain: {
      os << "instance: " << instance_label(rec) << "\n";
      if (rec.contains("error")) {
        os << "error: " << rec["error"].get<std::string>() << "\n";
        break;
      }
      const Json& reg = rec["regime"];
      auto yn = [](bool b) { return b ? "yes" : "no"; };
      os << "regime: balanced " << yn(reg["balanced"].get<bool>()) << ", strong inequality "
         << yn(reg["strong_inequality"].get<bool>()) << ", n-d>=g+1 " << yn(reg["geometric_range"].get<bool>())
         << ", n-d>=1 " << yn(reg["virtual_range"].get<bool>()) << ", sae " << reg["sae"].get<std::string>() << "\n";
      for (const auto& v : rec["values"]) {
        os << "  " << v["engine"].get<std::string>() << " (" << v["kind"].get<std::string>() << "): "
           << (v.contains("value") ? v["value"].get<std::string>() : "error: " + v["error"].get<std::string>())
           << (v.contains("conditional") ? "  [conditional]" : "") << "\n";
      }
      for (const char* key : {"tev", "vtev"}) {
        if (rec.contains(key)) os << key << ": " << (rec[key].is_null() ? "n/a" : rec[key].get<std::string>()) << "\n";
      }
      if (rec.contains("verdict")) {
        os << "verdict: " << rec["verdict"].get<std::string>();
        if (rec.contains("reason")) os << " (" << rec["reason"].get<std::string>() << ")";
        os << "\n";
      }
      break;
    }
  }
  return os.str();
}

}  // namespace tevctl
