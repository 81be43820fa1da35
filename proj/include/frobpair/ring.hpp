#ifndef FROBPAIR_RING_HPP
#define FROBPAIR_RING_HPP

#include <cctype>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "field.hpp"

namespace frobpair {

/// Ordered variable names of k[x_1, ..., x_d].
class VarContext {
public:
  explicit VarContext(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw std::invalid_argument("at least one variable is required");
    std::set<std::string> seen;
    for (const auto& n : names_) {
      if (!valid_identifier(n)) throw std::invalid_argument("invalid variable name '" + n + "'");
      if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name '" + n + "'");
    }
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  static bool valid_identifier(const std::string& s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
      if (!std::isalnum(static_cast<unsigned char>(c))) return false;
    return true;
  }

  friend bool operator==(const VarContext&, const VarContext&) = default;

private:
  std::vector<std::string> names_;
};

/// F_p[x_1, ..., x_d]: a shared, immutable field + variable context.
class Ring {
public:
  Ring(PrimeField field, VarContext vars)
      : data_(std::make_shared<const Data>(Data{field, std::move(vars)})) {}

  const PrimeField& field() const noexcept { return data_->field; }
  const VarContext& vars() const noexcept { return data_->vars; }
  std::size_t nvars() const noexcept { return data_->vars.size(); }
  std::uint64_t p() const noexcept { return data_->field.p(); }

  friend bool operator==(const Ring& a, const Ring& b) noexcept {
    return a.data_ == b.data_ || (a.data_->field == b.data_->field && a.data_->vars == b.data_->vars);
  }

private:
  struct Data {
    PrimeField field;
    VarContext vars;
  };
  std::shared_ptr<const Data> data_;
};

} // namespace frobpair

#endif // FROBPAIR_RING_HPP
