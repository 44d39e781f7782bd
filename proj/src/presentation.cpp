#include "randgrp/presentation.hpp"

#include <algorithm>
#include <string>

namespace randgrp {

void Presentation::validate() const {
  if (generators < 1) {
    throw PreconditionError("presentation needs at least one generator");
  }
  for (std::size_t i = 0; i < relators.size(); ++i) {
    Word const& r = relators[i];
    std::string const name =
        "relator " + std::to_string(i + 1) + " '" + r.to_string() + "'";
    if (r.empty()) {
      throw PreconditionError(name + " is empty");
    }
    if (r.max_generator() > generators) {
      throw PreconditionError(name + " uses a generator beyond " +
                              std::to_string(generators));
    }
    if (!is_cyclically_reduced(r)) {
      throw PreconditionError(name + " is not cyclically reduced");
    }
  }
}

std::size_t Presentation::max_relator_length() const noexcept {
  std::size_t out = 0;
  for (auto const& r : relators) {
    out = std::max(out, r.size());
  }
  return out;
}

std::size_t Presentation::min_relator_length() const noexcept {
  if (relators.empty()) {
    return 0;
  }
  std::size_t out = relators.front().size();
  for (auto const& r : relators) {
    out = std::min(out, r.size());
  }
  return out;
}

std::size_t Presentation::total_length() const noexcept {
  std::size_t out = 0;
  for (auto const& r : relators) {
    out += r.size();
  }
  return out;
}

}  // namespace randgrp
