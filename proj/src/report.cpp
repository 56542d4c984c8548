#include "qhopf/report.hpp"

namespace qhopf {

bool Report::ok() const { return failures() == 0; }

int Report::failures() const {
  int n = 0;
  for (const auto& c : checks) n += !c.pass;
  return n;
}

void Report::add(Check c) {
  auto now = std::chrono::steady_clock::now();
  c.seconds = std::chrono::duration<double>(now - last_).count();
  last_ = now;
  checks.push_back(std::move(c));
}

void Report::append(const Report& r) {
  for (const auto& c : r.checks) checks.push_back(c);
}

Check expect_zero(const std::string& name, const std::vector<Element>& r) {
  Check c;
  c.name = name;
  c.residuals = r;
  c.pass = true;
  for (const auto& e : r) c.pass = c.pass && e.is_zero();
  return c;
}

Check expect_zero(const std::string& name, const Element& r) { return expect_zero(name, std::vector<Element>{r}); }

Check expect_zero(const std::string& name, const MatForm& r) {
  return expect_zero(name, std::vector<Element>{r(0, 0), r(0, 1), r(1, 0), r(1, 1)});
}

Check expect_equal(const std::string& name, const Element& a, const Element& b) { return expect_zero(name, a - b); }

Check expect_equal(const std::string& name, const MatForm& a, const MatForm& b) { return expect_zero(name, a - b); }

Check expect_true(const std::string& name, bool ok, const std::string& detail) {
  Check c;
  c.name = name;
  c.pass = ok;
  c.detail = detail;
  return c;
}

std::string residual_full(const Check& c) {
  std::string s;
  for (std::size_t i = 0; i < c.residuals.size(); ++i) {
    if (c.residuals[i].is_zero()) continue;
    if (!s.empty()) s += "; ";
    s += "[" + std::to_string(i) + "] " + c.residuals[i].str();
  }
  return s.empty() ? "0" : s;
}

std::string residual_summary(const Check& c, std::size_t max_len) {
  std::string s = residual_full(c);
  if (s.size() > max_len) s = s.substr(0, max_len) + "...";
  return s;
}

bool numeric_zero(const Element& e, const mpq_class& q, const mpq_class& u, const mpq_class& p) {
  for (const auto& [k, c] : e.terms())
    for (const auto& [r, f] : c.terms())
      if (f.eval(q, u, p) != 0) return false;
  return true;
}

}  // namespace qhopf
