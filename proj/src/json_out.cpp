#include "json_out.hpp"

#include <atomic>
#include <mutex>
#include <thread>

#include "errors.hpp"
#include "spec_text.hpp"

namespace braidforge {

using nlohmann::json;

json to_json(const LaurentPoly& p) {
  json arr = json::array();
  for (auto [e, c] : p.terms()) arr.push_back(json::array({e, c}));
  return arr;
}

json to_json(const BraidWord& w) {
  return json{{"strands", w.strands()}, {"letters", w.letters()}};
}

json to_json(const InvariantProfile& p) {
  json j{{"components", p.components},
         {"euler_char", p.euler_char},
         {"crossings", p.crossings},
         {"strands", p.strands},
         {"alexander", to_json(p.alexander)},
         {"alexander_str", p.alexander.str("t")}};
  j["jones"] = p.jones ? to_json(*p.jones) : json(nullptr);
  return j;
}

json to_json(const SatelliteWitness& w) {
  json j{{"type", "satellite"},
         {"rule", to_string(w.rule)},
         {"d", w.d},
         {"companion", format(w.companion)},
         {"companion_is_knot", w.companion_is_knot}};
  if (w.rule == SatRule::S1) j["eta"] = w.eta;
  if (w.rule == SatRule::S2) {
    j["a"] = w.a;
    j["b"] = w.b;
    j["c"] = w.c;
    j["q_small"] = w.q_small;
  }
  j["pattern"] = w.pattern ? to_json(*w.pattern) : json(nullptr);
  j["pattern_spec"] = w.pattern_spec ? json(format(*w.pattern_spec)) : json(nullptr);
  return j;
}

json to_json(const HyperbolicWitness& w) {
  json j{{"type", "hyperbolic"},
         {"rule", to_string(w.rule)},
         {"k", w.k},
         {"q_prime", w.q_prime}};
  j["crossing_sum"] = w.crossing_sum ? json(*w.crossing_sum) : json(nullptr);
  return j;
}

json to_json(const GeometricVerdict& v) {
  json witnesses = json::array();
  for (const auto& w : v.satellites) witnesses.push_back(to_json(w));
  for (const auto& w : v.hyperbolics) witnesses.push_back(to_json(w));
  return json{{"kind", to_string(v.kind)}, {"witnesses", witnesses}, {"notes", v.notes}};
}

json to_json(const ConversionTrace& t) {
  json arr = json::array();
  for (const auto& step : t.steps)
    arr.push_back(json{{"rule", step.rule}, {"params", step.params}, {"summary", step.summary}});
  return arr;
}

std::string laurent_digest(const LaurentPoly& p) {
  std::uint64_t h = 14695981039346656037ULL;
  auto mix = [&](std::int64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= static_cast<std::uint64_t>(v >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  for (auto [e, c] : p.terms()) {
    mix(e);
    mix(c);
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

struct InvariantMatch {
  bool components, euler_char, alexander;
  json jones;  // bool, or null when either side skipped the bracket
  bool all() const {
    return components && euler_char && alexander && (jones.is_null() || jones.get<bool>());
  }
};

InvariantMatch compare_profiles(const InvariantProfile& a, const InvariantProfile& b) {
  InvariantMatch m;
  m.components = a.components == b.components;
  m.euler_char = a.euler_char == b.euler_char;
  m.alexander = a.alexander == b.alexander;
  m.jones = (a.jones && b.jones) ? json(*a.jones == *b.jones) : json(nullptr);
  return m;
}

}  // namespace

json run_command(const std::string& command, const std::string& spec_text,
                 const CommandOptions& opts) {
  ParsedSpec parsed = parse_spec(spec_text);

  std::string normalized_text;
  VLinkSpec v;
  ConversionTrace trace;
  std::optional<TLinkSpec> norm_t;
  if (std::holds_alternative<TLinkSpec>(parsed)) {
    norm_t = normalize_t(std::get<TLinkSpec>(parsed));
    normalized_text = format(*norm_t);
    TToVResult conv = t_to_v(*norm_t);
    v = conv.v;
    trace = conv.trace;
  } else {
    v = std::get<VLinkSpec>(parsed);
    normalized_text = format(v);
  }

  VToTResult forms = v_to_t(v);
  BraidWord minimal = braid_of_v(v);
  GeometricVerdict verdict = classify_v(v);
  InvariantProfile prof = profile(minimal, opts.jones_limit);

  json doc{{"schema", 1},
           {"command", command},
           {"input", spec_text},
           {"normalized", normalized_text},
           {"v_form", format(v)},
           {"t_forms", json{{"first", format(forms.first)}, {"second", format(forms.second)}}},
           {"minimal_braid", to_json(minimal)},
           {"verdict", to_json(verdict)},
           {"profile", to_json(prof)},
           {"trace", to_json(trace)}};

  if (command == "verify") {
    std::vector<std::pair<std::string, BraidWord>> presentations;
    presentations.emplace_back("input", norm_t ? braid_of_t(*norm_t) : minimal);
    presentations.emplace_back("minimal", minimal);
    presentations.emplace_back("first_form", braid_of_t(forms.first));
    presentations.emplace_back("second_form", braid_of_t(forms.second));

    std::vector<InvariantProfile> profiles;
    for (const auto& [name, w] : presentations) profiles.push_back(profile(w, opts.jones_limit));

    json comparisons = json::array();
    bool all_ok = true;
    std::string distinguished;
    for (std::size_t i = 1; i < presentations.size(); ++i) {
      InvariantMatch m = compare_profiles(profiles[0], profiles[i]);
      if (!m.all() && all_ok) {
        all_ok = false;
        ConsistencyReport rep = consistent(profiles[0], profiles[i]);
        distinguished = rep.distinguished_by.empty() ? "jones" : rep.distinguished_by;
      }
      comparisons.push_back(json{{"against", presentations[i].first},
                                 {"components", m.components},
                                 {"euler_char", m.euler_char},
                                 {"alexander", m.alexander},
                                 {"jones", m.jones}});
    }
    json presentation_names = json::array();
    for (const auto& [name, w] : presentations)
      presentation_names.push_back(json{{"name", name},
                                        {"strands", w.strands()},
                                        {"crossings", w.crossing_count()}});
    doc["equivalence"] = json{{"presentations", presentation_names},
                              {"comparisons", comparisons},
                              {"consistent", all_ok},
                              {"distinguished_by", all_ok ? json(nullptr) : json(distinguished)}};
  }
  return doc;
}

json enumerate_line(const TLinkSpec& t) {
  TClassification cls = classify_t(t);
  BraidWord minimal = braid_of_v(cls.v);
  json j{{"spec", format(normalize_t(t))},
         {"kind", to_string(cls.verdict.kind)},
         {"digest", laurent_digest(alexander(minimal))}};
  if (!cls.verdict.satellites.empty())
    j["rule"] = to_string(cls.verdict.satellites.front().rule);
  else if (!cls.verdict.hyperbolics.empty())
    j["rule"] = to_string(cls.verdict.hyperbolics.front().rule);
  else
    j["rule"] = nullptr;
  return j;
}

json enumerate_summary(long long total, const std::map<std::string, long long>& kind_counts) {
  return json{{"summary", true}, {"total", total}, {"counts", kind_counts}};
}

std::string run_enumeration(const EnumBounds& bounds, long long skip, int workers) {
  if (workers < 1) throw ValidationError("worker count must be >= 1");
  std::vector<TLinkSpec> specs = enumerate_specs(bounds);
  std::vector<std::string> lines(specs.size());
  std::vector<std::string> kinds(specs.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto work = [&] {
    for (std::size_t i = next.fetch_add(1); i < specs.size(); i = next.fetch_add(1)) {
      try {
        json line = enumerate_line(specs[i]);
        kinds[i] = line["kind"].get<std::string>();
        lines[i] = line.dump();
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  std::map<std::string, long long> counts;
  for (const std::string& k : kinds) counts[k] += 1;
  std::string out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (static_cast<long long>(i) < skip) continue;
    out += lines[i];
    out += '\n';
  }
  out += enumerate_summary(static_cast<long long>(lines.size()), counts).dump();
  out += '\n';
  return out;
}

}  // namespace braidforge
