#include "cli/registry.hpp"

#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "vfrac/errors.hpp"

namespace vfrac::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    const size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

double parse_double(const std::string& s, const std::string& selector) {
  const char* begin = s.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0') {
    throw UsageError("invalid number '" + s + "' in selector '" + selector + "'");
  }
  return v;
}

std::vector<double> parse_doubles(const std::string& s,
                                  const std::string& selector) {
  std::vector<double> out;
  for (const std::string& part : split(s, ',')) {
    out.push_back(parse_double(part, selector));
  }
  return out;
}

ScalarMap make_scalar_atom(const std::string& name) {
  if (name == "sin") return [](double t) { return std::sin(t); };
  if (name == "cos") return [](double t) { return std::cos(t); };
  if (name == "exp") return [](double t) { return std::exp(t); };
  if (name == "ln") return [](double t) { return std::log(t); };
  if (name.rfind("poly:", 0) == 0) {
    const std::vector<double> coef = parse_doubles(name.substr(5), name);
    if (coef.empty()) throw UsageError("empty coefficient list in '" + name + "'");
    return [coef](double t) {
      double acc = 0.0;
      for (size_t k = coef.size(); k-- > 0;) acc = acc * t + coef[k];
      return acc;
    };
  }
  if (name.rfind("expsum:", 0) == 0) {
    const double a = parse_double(name.substr(7), name);
    return [a](double t) { return std::exp(a * t); };
  }
  if (name.rfind("pow:", 0) == 0) {
    const double a = parse_double(name.substr(4), name);
    return [a](double t) { return std::pow(t, a); };
  }
  throw UsageError("unknown function selector '" + name + "'");
}

// One monomial "[sign][coef]x[i]y[j]"; every piece optional but not all absent.
struct Monomial {
  double coef = 1.0;
  int x_exp = 0;
  int y_exp = 0;
};

int parse_exponent(const std::string& term, size_t& pos) {
  if (pos >= term.size() || !std::isdigit(static_cast<unsigned char>(term[pos]))) {
    return 1;
  }
  int value = 0;
  while (pos < term.size() && std::isdigit(static_cast<unsigned char>(term[pos]))) {
    value = value * 10 + (term[pos] - '0');
    ++pos;
  }
  return value;
}

Monomial parse_monomial(const std::string& term, const std::string& selector) {
  Monomial m;
  size_t pos = 0;
  double sign = 1.0;
  if (pos < term.size() && (term[pos] == '+' || term[pos] == '-')) {
    sign = term[pos] == '-' ? -1.0 : 1.0;
    ++pos;
  }
  bool saw_anything = false;
  if (pos < term.size() && term[pos] != 'x' && term[pos] != 'y') {
    const char* begin = term.c_str() + pos;
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) {
      throw UsageError("invalid term '" + term + "' in selector '" + selector + "'");
    }
    m.coef = v;
    pos += size_t(end - begin);
    saw_anything = true;
  }
  if (pos < term.size() && term[pos] == 'x') {
    ++pos;
    m.x_exp = parse_exponent(term, pos);
    saw_anything = true;
  }
  if (pos < term.size() && term[pos] == 'y') {
    ++pos;
    m.y_exp = parse_exponent(term, pos);
    saw_anything = true;
  }
  if (!saw_anything || pos != term.size()) {
    throw UsageError("invalid term '" + term + "' in selector '" + selector + "'");
  }
  m.coef *= sign;
  return m;
}

std::vector<std::string> split_terms(const std::string& body) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : body) {
    if (c == '+' || c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

ScalarMap make_scalar(const std::string& selector) {
  const std::vector<std::string> parts = split(selector, '@');
  for (const std::string& p : parts) {
    if (p.empty()) throw UsageError("empty stage in selector '" + selector + "'");
  }
  ScalarMap f = make_scalar_atom(parts.back());
  for (size_t i = parts.size() - 1; i-- > 0;) {
    ScalarMap outer = make_scalar_atom(parts[i]);
    ScalarMap inner = std::move(f);
    f = [outer = std::move(outer), inner = std::move(inner)](double t) {
      return outer(inner(t));
    };
  }
  return f;
}

Field2D make_field(const std::string& selector) {
  if (selector.rfind("poly2:", 0) == 0) {
    std::vector<Monomial> terms;
    for (const std::string& t : split_terms(selector.substr(6))) {
      terms.push_back(parse_monomial(t, selector));
    }
    return [terms](double x, double y) {
      double acc = 0.0;
      for (const Monomial& m : terms) {
        acc += m.coef * std::pow(x, m.x_exp) * std::pow(y, m.y_exp);
      }
      return acc;
    };
  }
  if (selector.rfind("expsum:", 0) == 0) {
    const double a = parse_double(selector.substr(7), selector);
    return [a](double x, double y) { return std::exp(a * (x + y)); };
  }
  if (selector == "sincos") {
    return [](double x, double y) { return std::sin(x) * std::cos(y); };
  }
  throw UsageError("unknown field selector '" + selector + "'");
}

VectorMap make_vector_field(const std::vector<std::string>& selectors) {
  if (selectors.empty()) {
    throw UsageError("at least one field selector is required");
  }
  std::vector<Field2D> components;
  components.reserve(selectors.size());
  for (const std::string& s : selectors) components.push_back(make_field(s));
  VectorMap m;
  m.input_dim = 2;
  m.output_dim = int(components.size());
  m.eval = [components](const std::vector<double>& x) {
    std::vector<double> out;
    out.reserve(components.size());
    for (const Field2D& c : components) out.push_back(c(x[0], x[1]));
    return out;
  };
  return m;
}

}  // namespace vfrac::cli
