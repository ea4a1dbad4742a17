#include "agp/periodic.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace agp {

bool PeriodicParams::satisfies_nonvanishing() const {
  for (const CoefficientBank& b : banks) {
    if (b.a.is_zero() || b.r.is_zero()) return false;
  }
  return !banks.empty();
}

TermVector eval_periodic(const PeriodicParams& p, std::size_t n, std::size_t phase) {
  if (p.banks.empty()) {
    throw Error(ErrorKind::parse, "periodic recurrence needs at least one bank");
  }
  const std::size_t m = p.banks.size();

  // coeffs[i][k] = (a_i + k d_i) r_i^k
  std::vector<std::vector<Rat>> coeffs(m);
  for (std::size_t i = 0; i < m; ++i) {
    const CoefficientBank& b = p.banks[i];
    Rat r_power(1);
    coeffs[i].reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
      coeffs[i].push_back((b.a + Rat(BigInt(static_cast<unsigned long>(k))) * b.d) * r_power);
      r_power *= b.r;
    }
  }

  TermVector x;
  x.reserve(n + 1);
  x.push_back(p.x0);
  for (std::size_t step = 0; step < n; ++step) {
    const std::vector<Rat>& c = coeffs[(step + phase) % m];
    Rat next;
    for (std::size_t k = 0; k <= step; ++k) {
      next += c[k] * x[step - k];
    }
    x.push_back(std::move(next));
  }
  return x;
}

namespace {

double ratio(const TermVector& x, std::size_t top, std::size_t bottom) {
  if (x[bottom].is_zero()) {
    throw Error(ErrorKind::probe, "x_" + std::to_string(bottom) +
                                      " = 0 at the probe; try a larger n");
  }
  return (x[top] / x[bottom]).to_double();
}

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

CoefficientBank parse_bank(const std::string& text) {
  std::vector<std::string> fields;
  std::stringstream ss(text);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(strip(field));
  if (fields.size() != 3) {
    throw Error(ErrorKind::parse, "bank '" + text + "' must be 'a,d,r'");
  }
  return {Rat::parse(fields[0]), Rat::parse(fields[1]), Rat::parse(fields[2])};
}

}  // namespace

GrowthDiagnostic empirical_growth(const PeriodicParams& p, std::size_t n, double tol) {
  const std::size_t m = p.banks.size();
  if (n < 2 * m) {
    throw Error(ErrorKind::probe, "growth probe needs n >= 2m");
  }
  const TermVector x = eval_periodic(p, n);
  GrowthDiagnostic g;
  for (std::size_t k = n - m; k < n; ++k) {
    g.step_ratios.push_back(ratio(x, k + 1, k));
  }
  g.period_ratio = ratio(x, n, n - m);
  g.previous_period_ratio = ratio(x, n - m, n - 2 * m);
  g.stabilized = std::abs(g.period_ratio - g.previous_period_ratio) <= tol;
  return g;
}

std::vector<CoefficientBank> parse_banks(const std::string& text) {
  std::vector<CoefficientBank> banks;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (strip(item).empty()) continue;
    banks.push_back(parse_bank(item));
  }
  if (banks.empty()) {
    throw Error(ErrorKind::parse, "no banks in '" + text + "'");
  }
  return banks;
}

PeriodicParams parse_periodic_config(const std::string& contents) {
  PeriodicParams p;
  p.x0 = Rat(1);
  std::stringstream ss(contents);
  std::string line;
  while (std::getline(ss, line)) {
    const std::string compact = strip(line);
    if (compact.empty() || compact.front() == '#') continue;
    if (compact.rfind("x0=", 0) == 0) {
      p.x0 = Rat::parse(compact.substr(3));
      continue;
    }
    std::string fields = line;
    for (char& c : fields) {
      if (c == ',') c = ' ';
    }
    std::stringstream fs(fields);
    std::string a, d, r, extra;
    if (!(fs >> a >> d >> r) || (fs >> extra)) {
      throw Error(ErrorKind::parse, "config line '" + line + "' must hold 'a d r'");
    }
    p.banks.push_back({Rat::parse(a), Rat::parse(d), Rat::parse(r)});
  }
  if (p.banks.empty()) {
    throw Error(ErrorKind::parse, "config defines no banks");
  }
  return p;
}

}  // namespace agp
