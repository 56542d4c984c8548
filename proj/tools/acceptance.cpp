#include <cstdio>
#include <functional>
#include <map>
#include <string>

#include "qhopf/error.hpp"
#include "qhopf/suites.hpp"

using namespace qhopf;

namespace {

// Residuals must vanish identically; numeric verdicts compare exact rationals.
constexpr const char* kTolerance = "exact";
const mpq_class kNumericQ(7, 5);

struct Run {
  Report report;
  std::string error;
};

std::map<std::string, Run> cache;

const Run& run(const std::string& suite, Variant v, int n = 2) {
  std::string key = suite + "/" + variant_name(v) + "/" + std::to_string(n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  SuiteOptions o;
  o.base.variant = v;
  o.n = n;
  Run r;
  try {
    r.report = run_suite(suite, o);
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return cache.emplace(key, std::move(r)).first->second;
}

using Pick = std::function<bool(const Check&)>;

bool all(const Check&) { return true; }

Pick named(std::initializer_list<const char*> names) {
  std::vector<std::string> v(names.begin(), names.end());
  return [v](const Check& c) {
    for (const auto& n : v)
      if (c.name == n) return true;
    return false;
  };
}

struct Tally {
  int checks = 0;
  std::vector<std::string> failures;

  void take(const std::string& suite, Variant v, const Pick& pick = all, int n = 2) {
    const Run& r = run(suite, v, n);
    std::string tag = suite + "[" + variant_name(v) + "]";
    if (!r.error.empty()) {
      failures.push_back(tag + " error: " + r.error);
      return;
    }
    int used = 0;
    for (const auto& c : r.report.checks) {
      if (!pick(c)) continue;
      ++used;
      ++checks;
      if (!c.pass) failures.push_back(tag + " " + c.name + ": " + residual_summary(c, 160));
    }
    if (used == 0) failures.push_back(tag + " selected no checks");
  }
  void both(const std::string& suite, const Pick& pick = all) {
    take(suite, Variant::Standard, pick);
    take(suite, Variant::Hat, pick);
  }
};

int failed = 0;

void line(int id, const std::string& title, const Tally& t, const std::string& note = "") {
  bool ok = t.failures.empty();
  if (!ok) ++failed;
  std::printf("%s  %2d  %s  (%d checks, tol=%s)", ok ? "PASS" : "FAIL", id, title.c_str(), t.checks, kTolerance);
  if (!ok) {
    std::printf("  failing: %s", t.failures.front().c_str());
    if (t.failures.size() > 1) std::printf(" [+%zu more]", t.failures.size() - 1);
  }
  if (!note.empty()) std::printf("  note: %s", note.c_str());
  std::printf("\n");
  std::fflush(stdout);
}

bool passes(const std::string& suite, Variant v, const std::string& name) {
  const Run& r = run(suite, v);
  for (const auto& c : r.report.checks)
    if (c.name == name) return c.pass;
  return false;
}

}  // namespace

int main() {
  const Variant S = Variant::Standard;
  {
    Tally t;
    t.take("tensors", S,
           named({"Rhat Hecke: (Rhat - q)(Rhat + q^-1) = 0", "braid equation for R4 (64x64)",
                  "spectral decomposition R4 = q Ps - q^-1 PA + q^-3 Pt", "eigenvalues q, -q^-1, q^-3"}));
    line(1, "braid equation for R4 (4096 entries) and spectral decomposition", t);
  }
  {
    Tally t;
    t.take("tensors", S,
           named({"projector ranks (9,3,3,6,1)", "projectors idempotent and orthogonal", "completeness Ps + Pa + Pa' + Pt = 1",
                  "g^{sm} g_{sm} = (q + q^-1)^2", "Pt = g^{ij} g_{kl} / (q + q^-1)^2"}));
    line(2, "projector ranks (9,3,3,6,1), orthogonality, completeness, metric trace, Pt formula", t);
  }
  {
    Tally t;
    t.take("tensors", S, named({"resolve_k: unique solution", "k = q - q^-1", "k at q=1 is 0"}));
    line(3, "resolve_k: unique k in Q(q), k(1) = 0", t);
  }
  {
    Tally t;
    t.both("ncalg.confluence");
    t.take("ncalg.strategy", S);
    line(4, "confluence to length 3 in core, localized, braided(2); 1000 random normal forms strategy independent", t);
  }
  {
    Tally t;
    t.both("sun.T");
    line(5, "xbar x = x xbar = |x|^2 I, det_q central, T^dag T = I, det_q(T) = 1", t);
  }
  {
    Tally t;
    t.both("forms.d", named({"d (Leibniz) = [-theta, .} on 100 random y-free forms", "theta^2 = 0"}));
    t.both("forms.xblu", named({"x xibar + xi xbar = (q^(+-2) - 1) theta |x|^2 I", "xbar xi + xibar x = (q^(+-2) - 1) theta |x|^2 I"}));
    line(6, "d via Leibniz = d via theta commutator (100 random), theta^2 = 0, both xblu identities", t);
  }
  {
    Tally t;
    t.take("forms.hodge", S, named({"** = id on 100 random 2-forms", "*f = f", "*f' = -f'", "d(a) = f"}));
    std::string note;
    if (passes("forms.hodge", S, "d(a) = -f")) note = "d(a) = -f holds exactly (graded Leibniz sign)";
    line(7, "** = id, *f = f, *f' = -f', d(a) = f entrywise", t, note);
  }
  {
    Tally t;
    t.both("sun.txi");
    t.both("sun.mc");
    t.both("sun.trace");
    t.both("sun.v", [](const Check& c) { return c.name != "v = theta form" && c.name != "v' = theta form"; });
    std::string note;
    if (!passes("sun.v", S, "v = theta form"))
      note = "as-printed normalization of v, v' differs by q^(+-4); dualities unaffected";
    line(8, "T xi reordering, Maurer-Cartan, theta trace, v/v' duality in both calculi", t, note);
  }
  {
    Tally t;
    t.both("gauge.inst");
    t.both("gauge.anti");
    t.both("gauge.singular");
    line(9, "instanton F = closed form and self-dual, anti-instanton antiself-dual, rho^2 = 0 gives F = 0, A = T(Ahat Tbar + dTbar)", t);
  }
  {
    Tally t;
    t.both("gauge.phi", named({"Box phi = 0"}));
    t.take("gauge.multiphi", S);
    line(10, "Box phi = 0 for one instanton and term by term for n = 2", t);
  }
  {
    Tally t;
    t.both("gauge.proj");
    line(11, "projector module: u^dag u = I, P^2 = P, P^dag = P", t);
  }
  {
    Tally t;
    t.both("gauge.moduli");
    line(12, "braided shift in braided(2): P_A z z = 0, d-z and xi-z relations as for x", t);
  }
  {
    Tally t;
    t.both("sun.sphere");
    line(13, "sphere map: alpha' alpha'* + beta' beta'* + z^2 = 1", t);
  }
  {
    Tally t;
    t.take("classical", S);
    int numeric = 0;
    for (Variant v : {Variant::Standard, Variant::Hat})
      for (const auto& info : suite_list()) {
        const Run& r = run(info.name, v);
        if (!r.error.empty()) {
          t.failures.push_back(info.name + " error: " + r.error);
          continue;
        }
        std::uint64_t seed = 1;
        for (const auto& c : r.report.checks) {
          auto nv = numeric_verdict(c, kNumericQ, seed++);
          if (!nv.applicable) continue;
          ++numeric;
          if (nv.zero != c.pass)
            t.failures.push_back(info.name + "[" + variant_name(v) + "] " + c.name + ": numeric verdict at q=7/5, u=" +
                                 nv.u.get_str() + ", p=" + nv.p.get_str() + " disagrees");
        }
      }
    line(14, "q=1 classical limits; numeric falsifier at q=7/5 agrees with exact verdicts (" + std::to_string(numeric) +
                 " checks, every suite, both calculi)",
         t);
  }
  std::printf("%d of 14 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
