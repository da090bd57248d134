#include <json.hpp>
#include <ostream>
#include <stdexcept>

#include "mellin/closed_form.hpp"

namespace mellin::closed_form {
namespace {

struct KindInfo {
  SymbolKind kind;
  const char* name;
  const char* key;
};

constexpr KindInfo kKinds[] = {
    {SymbolKind::zeta_prime_ratio, "zeta_prime_ratio", "p"},
    {SymbolKind::beta_prime_ratio, "beta_prime_ratio", "p"},
    {SymbolKind::eta_prime_neg, "eta_prime_neg", "i"},
    {SymbolKind::beta_prime_neg, "beta_prime_neg", "i"},
    {SymbolKind::one, "one", ""},
    {SymbolKind::ln_pi, "ln_pi", ""},
    {SymbolKind::ln2, "ln2", ""},
};

const KindInfo& info(SymbolKind kind) {
  for (const auto& k : kKinds) {
    if (k.kind == kind) return k;
  }
  throw std::logic_error("unknown symbol kind");
}

std::string latex_rational(const Rational& r) {
  if (r.is_integer()) return r.num().get_str();
  return "\\frac{" + r.num().get_str() + "}{" + r.den().get_str() + "}";
}

std::string latex_symbol(const BasisSymbol& s) {
  switch (s.kind) {
    case SymbolKind::zeta_prime_ratio: {
      const std::string e = std::to_string(2 * s.index + 2);
      return "\\frac{\\zeta'(" + e + ")}{\\pi^{" + e + "}}";
    }
    case SymbolKind::beta_prime_ratio: {
      const std::string e = std::to_string(2 * s.index + 1);
      return "\\frac{\\beta'(" + e + ")}{" + (s.index == 0 ? std::string("\\pi") : "\\pi^{" + e + "}") + "}";
    }
    case SymbolKind::eta_prime_neg:
      return "\\eta'(-" + std::to_string(2 * s.index + 1) + ")";
    case SymbolKind::beta_prime_neg:
      return s.index == 0 ? "\\beta'(0)" : "\\beta'(-" + std::to_string(2 * s.index) + ")";
    case SymbolKind::one:
      return "";
    case SymbolKind::ln_pi:
      return "\\ln \\pi";
    case SymbolKind::ln2:
      return "\\ln 2";
  }
  return "";
}

}  // namespace

bool BasisSymbol::indexed() const { return info(kind).key[0] != '\0'; }

std::string BasisSymbol::name() const { return info(kind).name; }

std::string BasisSymbol::index_key() const { return info(kind).key; }

std::string BasisSymbol::describe() const {
  switch (kind) {
    case SymbolKind::zeta_prime_ratio: {
      const std::string e = std::to_string(2 * index + 2);
      return "zeta'(" + e + ")/pi^" + e;
    }
    case SymbolKind::beta_prime_ratio: {
      const std::string e = std::to_string(2 * index + 1);
      return "beta'(" + e + ")/pi" + (index == 0 ? "" : "^" + e);
    }
    case SymbolKind::eta_prime_neg:
      return "eta'(-" + std::to_string(2 * index + 1) + ")";
    case SymbolKind::beta_prime_neg:
      return index == 0 ? "beta'(0)" : "beta'(-" + std::to_string(2 * index) + ")";
    case SymbolKind::one:
      return "1";
    case SymbolKind::ln_pi:
      return "ln(pi)";
    case SymbolKind::ln2:
      return "ln(2)";
  }
  return "";
}

ClosedForm::ClosedForm(std::initializer_list<std::pair<const BasisSymbol, Rational>> terms) {
  for (const auto& [symbol, value] : terms) add(symbol, value);
}

Rational ClosedForm::coeff(const BasisSymbol& symbol) const {
  auto it = terms_.find(symbol);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ClosedForm::add(const BasisSymbol& symbol, const Rational& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(symbol, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ClosedForm ClosedForm::scaled(const Rational& factor) const {
  ClosedForm out;
  if (factor.is_zero()) return out;
  for (const auto& [symbol, value] : terms_) out.terms_.emplace(symbol, value * factor);
  return out;
}

ClosedForm operator+(const ClosedForm& a, const ClosedForm& b) {
  ClosedForm out = a;
  for (const auto& [symbol, value] : b.terms_) out.add(symbol, value);
  return out;
}

ClosedForm operator-(const ClosedForm& a, const ClosedForm& b) { return a + b.scaled(Rational(-1)); }

std::string ClosedForm::to_json() const {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [symbol, value] : terms_) {
    nlohmann::ordered_json t;
    t["symbol"] = symbol.name();
    if (symbol.indexed()) t[symbol.index_key()] = symbol.index;
    t["coeff"] = value.to_string();
    terms.push_back(std::move(t));
  }
  nlohmann::ordered_json root;
  root["terms"] = std::move(terms);
  return root.dump();
}

ClosedForm ClosedForm::from_json(const std::string& text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("closed form JSON: ") + e.what());
  }
  if (!root.is_object() || !root.contains("terms") || !root["terms"].is_array()) {
    throw std::invalid_argument("closed form JSON: expected an object with a \"terms\" array");
  }
  ClosedForm out;
  for (const auto& t : root["terms"]) {
    if (!t.is_object() || !t.contains("symbol") || !t.contains("coeff")) {
      throw std::invalid_argument("closed form JSON: each term needs \"symbol\" and \"coeff\"");
    }
    const std::string name = t["symbol"].get<std::string>();
    const KindInfo* found = nullptr;
    for (const auto& k : kKinds) {
      if (name == k.name) found = &k;
    }
    if (found == nullptr) throw std::invalid_argument("closed form JSON: unknown symbol '" + name + "'");
    BasisSymbol symbol{found->kind, 0};
    if (found->key[0] != '\0') {
      if (!t.contains(found->key) || !t[found->key].is_number_unsigned()) {
        throw std::invalid_argument("closed form JSON: symbol '" + name + "' needs a non-negative \"" +
                                    found->key + "\"");
      }
      symbol.index = t[found->key].get<unsigned>();
    }
    out.add(symbol, Rational::parse(t["coeff"].get<std::string>()));
  }
  return out;
}

std::string ClosedForm::to_latex() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [symbol, value] : terms_) {
    const Rational mag = exact::abs(value);
    if (value.sign() < 0) {
      out += first ? "-" : " - ";
    } else if (!first) {
      out += " + ";
    }
    first = false;
    const std::string sym = latex_symbol(symbol);
    if (sym.empty()) {
      out += latex_rational(mag);
      continue;
    }
    if (mag != Rational(1)) {
      out += latex_rational(mag);
      const bool ratio_like = symbol.kind != SymbolKind::ln_pi && symbol.kind != SymbolKind::ln2;
      if (ratio_like) out += "\\,";
    }
    out += sym;
  }
  return out;
}

std::string ClosedForm::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [symbol, value] : terms_) {
    const Rational mag = exact::abs(value);
    if (value.sign() < 0) {
      out += first ? "-" : " - ";
    } else if (!first) {
      out += " + ";
    }
    first = false;
    const std::string mag_text = mag.is_integer() ? mag.num().get_str() : mag.to_string();
    if (symbol.kind == SymbolKind::one) {
      out += mag_text;
    } else if (mag == Rational(1)) {
      out += symbol.describe();
    } else {
      out += mag_text + " * " + symbol.describe();
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const ClosedForm& cf) { return os << cf.to_string(); }

}  // namespace mellin::closed_form
