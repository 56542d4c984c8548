#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "qhopf/forms.hpp"

namespace qhopf {

// One verified statement. Identity checks carry their residuals, which are
// all zero exactly when the check passes.
struct Check {
  std::string name;
  bool pass = false;
  std::vector<Element> residuals;
  std::string detail;
  // Wall time since the previous check of the same report.
  double seconds = 0;
};

struct Report {
  std::string suite;
  std::string fingerprint;
  std::vector<Check> checks;
  bool ok() const;
  int failures() const;
  void add(Check c);
  void append(const Report& r);

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

Check expect_zero(const std::string& name, const Element& r);
Check expect_zero(const std::string& name, const MatForm& r);
Check expect_zero(const std::string& name, const std::vector<Element>& r);
Check expect_equal(const std::string& name, const Element& a, const Element& b);
Check expect_equal(const std::string& name, const MatForm& a, const MatForm& b);
Check expect_true(const std::string& name, bool ok, const std::string& detail = "");

// Canonical residual text, nonzero entries only, truncated at max_len bytes.
std::string residual_summary(const Check& c, std::size_t max_len = 4096);
std::string residual_full(const Check& c);

// Every coefficient of e vanishes at (q, u, p). Radical monomials are
// independent over the rational coefficients, so the rational parts are
// specialized one by one. Throws PoleAtPoint.
bool numeric_zero(const Element& e, const mpq_class& q, const mpq_class& u, const mpq_class& p);

}  // namespace qhopf
