#include "qhopf/verify.hpp"

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "qhopf/error.hpp"
#include "qhopf/parser.hpp"

namespace qhopf {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

struct Outcome {
  Report report;
  std::string error;
  double seconds = 0;
};

std::string trim(std::string s) {
  auto sp = [](unsigned char c) { return std::isspace(c) || c == '"' || c == '\''; };
  while (!s.empty() && sp(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && sp(static_cast<unsigned char>(s.back()))) s.pop_back();
  return s;
}

Variant parse_variant(const std::string& v) {
  if (v == "standard") return Variant::Standard;
  if (v == "hat") return Variant::Hat;
  fail(ErrorKind::ConfigError, "variant must be standard or hat, got '" + v + "'");
}

int parse_int(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    int r = std::stoi(v, &used);
    if (used == v.size()) return r;
  } catch (const std::exception&) {
  }
  fail(ErrorKind::ConfigError, key + " must be an integer, got '" + v + "'");
}

// Applies one key with its raw string inputs.
void apply_key(VerifyOptions& opt, const std::string& key, const std::vector<std::string>& in) {
  auto one = [&]() -> std::string {
    if (in.size() != 1) fail(ErrorKind::ConfigError, key + " takes one value");
    return trim(in[0]);
  };
  auto joined = [&] {
    std::string s;
    for (const auto& x : in) s += (s.empty() ? "" : ",") + trim(x);
    return s;
  };
  if (key == "variant") {
    opt.suite.base.variant = parse_variant(one());
  } else if (key == "n") {
    opt.suite.n = parse_int(key, one());
  } else if (key == "max_overlap" || key == "max-overlap") {
    opt.suite.max_overlap = parse_int(key, one());
  } else if (key == "max_steps" || key == "max-steps") {
    opt.suite.base.max_steps = parse_int(key, one());
  } else if (key == "jobs") {
    opt.jobs = parse_int(key, one());
  } else if (key == "q_numeric" || key == "q-numeric") {
    opt.q_numeric = cli::parse_rational(one());
  } else if (key == "suites") {
    opt.suites.clear();
    for (const auto& x : in) opt.suites.push_back(trim(x));
  } else if (key == "order.xi" || key == "order.pd" || key == "order.x") {
    apply_order(opt.suite.base, key.substr(6) + "=" + joined());
  } else {
    fail(ErrorKind::ConfigError, "unknown configuration key '" + key + "'");
  }
}

void flatten(const nlohmann::json& j, const std::string& prefix, VerifyOptions& opt) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    const auto& v = it.value();
    if (v.is_object()) {
      flatten(v, key, opt);
      continue;
    }
    std::vector<std::string> in;
    auto text = [](const nlohmann::json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
    if (v.is_array())
      for (const auto& x : v) in.push_back(text(x));
    else
      in.push_back(text(v));
    apply_key(opt, key, in);
  }
}

}  // namespace

std::array<int, 4> parse_order(const std::string& list) {
  std::array<int, 4> r{};
  std::vector<std::string> parts;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');) parts.push_back(trim(item));
  if (parts.size() != 4) fail(ErrorKind::ConfigError, "order needs four pair labels, got '" + list + "'");
  std::array<bool, 4> seen{};
  for (std::size_t i = 0; i < 4; ++i) {
    const std::string& s = parts[i];
    int v = -1;
    if (s == "11") v = 0;
    else if (s == "12") v = 1;
    else if (s == "21") v = 2;
    else if (s == "22") v = 3;
    else if (s.size() == 1 && s[0] >= '0' && s[0] <= '3') v = s[0] - '0';
    if (v < 0) fail(ErrorKind::ConfigError, "bad pair label '" + s + "' (use 11, 12, 21, 22)");
    if (seen[static_cast<std::size_t>(v)]) fail(ErrorKind::ConfigError, "repeated pair label in '" + list + "'");
    seen[static_cast<std::size_t>(v)] = true;
    r[i] = v;
  }
  return r;
}

void apply_order(AlgebraConfig& c, const std::string& spec) {
  auto eq = spec.find('=');
  if (eq == std::string::npos) fail(ErrorKind::ConfigError, "order must be KIND=LIST, got '" + spec + "'");
  std::string kind = trim(spec.substr(0, eq));
  auto o = parse_order(spec.substr(eq + 1));
  if (kind == "xi") c.xi_order = o;
  else if (kind == "pd") c.pd_order = o;
  else if (kind == "x") c.x_order = o;
  else fail(ErrorKind::ConfigError, "order kind must be xi, pd or x, got '" + kind + "'");
}

void load_config(const std::string& path, VerifyOptions& opt) {
  if (!std::filesystem::exists(path)) fail(ErrorKind::ConfigError, "config file not found: " + path);
  if (std::filesystem::path(path).extension() == ".json") {
    std::ifstream in(path);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorKind::ConfigError, std::string("config: ") + e.what());
    }
    if (!j.is_object()) fail(ErrorKind::ConfigError, "config must be a JSON object");
    flatten(j, "", opt);
    return;
  }
  std::vector<CLI::ConfigItem> items;
  try {
    items = CLI::ConfigTOML().from_file(path);
  } catch (const CLI::Error& e) {
    fail(ErrorKind::ConfigError, std::string("config: ") + e.what());
  }
  for (const auto& it : items) {
    if (it.name == "++" || it.name == "--") continue;  // section markers
    apply_key(opt, it.fullname(), it.inputs);
  }
}

VerifyResult verify(const VerifyOptions& opt) {
  std::vector<std::string> names;
  for (const auto& s : opt.suites) {
    if (s == "all") {
      for (const auto& i : suite_list()) names.push_back(i.name);
      continue;
    }
    if (!suite_exists(s)) fail(ErrorKind::UnknownSuite, "unknown suite '" + s + "'");
    names.push_back(s);
  }
  if (names.empty()) fail(ErrorKind::ConfigError, "no suites given");

  std::vector<Outcome> out(names.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < names.size();) {
      auto t0 = std::chrono::steady_clock::now();
      try {
        out[i].report = run_suite(names[i], opt.suite);
      } catch (const std::exception& e) {
        out[i].error = e.what();
      }
      out[i].seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  int jobs = std::max(1, std::min<int>(opt.jobs, static_cast<int>(names.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  using J = nlohmann::ordered_json;
  VerifyResult res;
  J& j = res.json;
  const AlgebraConfig& base = opt.suite.base;
  j["schema"] = 1;
  j["config"] = {{"variant", variant_name(base.variant)},
                 {"n", opt.suite.n},
                 {"max_overlap", opt.suite.max_overlap},
                 {"q_numeric", opt.q_numeric ? J(opt.q_numeric->get_str()) : J(nullptr)}};
  j["suites"] = J::array();
  J timing = {{"total_seconds", 0.0}, {"suites", J::object()}};
  int n_pass = 0, n_fail = 0, n_err = 0, disagree = 0;
  double total = 0;
  for (std::size_t i = 0; i < names.size(); ++i) {
    const Outcome& o = out[i];
    J s;
    s["suite"] = names[i];
    J tchecks = J::array();
    total += o.seconds;
    if (!o.error.empty()) {
      s["fingerprint"] = base.fingerprint();
      s["status"] = "error";
      s["checks"] = J::array({J{{"name", names[i]}, {"status", "error"}, {"residual", ""}, {"detail", o.error}}});
      ++n_err;
    } else {
      s["fingerprint"] = o.report.fingerprint;
      s["status"] = o.report.ok() ? "pass" : "fail";
      J checks = J::array();
      for (std::size_t k = 0; k < o.report.checks.size(); ++k) {
        const Check& c = o.report.checks[k];
        J cj;
        cj["name"] = c.name;
        cj["status"] = c.pass ? "pass" : "fail";
        cj["residual"] = residual_summary(c);
        cj["detail"] = c.detail;
        if (opt.q_numeric) {
          std::uint64_t seed = fnv1a(names[i] + "/" + std::to_string(k) + "/" + c.name);
          try {
            auto nv = numeric_verdict(c, *opt.q_numeric, seed);
            if (nv.applicable) {
              bool agrees = nv.zero == c.pass;
              if (!agrees) ++disagree;
              cj["numeric"] = {{"q", opt.q_numeric->get_str()},
                               {"u", nv.u.get_str()},
                               {"p", nv.p.get_str()},
                               {"zero", nv.zero},
                               {"agrees", agrees}};
            } else {
              cj["numeric"] = nullptr;
            }
          } catch (const std::exception& e) {
            cj["numeric"] = {{"error", e.what()}};
          }
        }
        if (!opt.dump_dir.empty() && !c.pass && !c.residuals.empty()) {
          std::filesystem::path dir = std::filesystem::path(opt.dump_dir) / names[i];
          std::filesystem::create_directories(dir);
          std::string file = std::to_string(k) + ".txt";
          std::ofstream f(dir / file);
          f << c.name << "\n" << residual_full(c) << "\n";
          cj["residual_file"] = names[i] + "/" + file;
        }
        (c.pass ? n_pass : n_fail)++;
        checks.push_back(cj);
        tchecks.push_back(c.seconds);
      }
      s["checks"] = checks;
    }
    j["suites"].push_back(s);
    timing["suites"][names[i]] = {{"seconds", o.seconds}, {"checks", tchecks}};
  }
  j["summary"] = {{"suites", names.size()}, {"checks", n_pass + n_fail + n_err}, {"pass", n_pass}, {"fail", n_fail},
                  {"error", n_err}};
  if (opt.q_numeric) j["summary"]["numeric_disagreements"] = disagree;
  timing["total_seconds"] = total;
  if (opt.timing) j["timing"] = timing;
  res.exit_code = (n_fail + n_err) == 0 ? 0 : 1;
  return res;
}

}  // namespace qhopf
