#ifndef WZCERT_ERRORS_HPP
#define WZCERT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace wzcert {

// Argument outside the mathematical domain of an operation (negative harmonic
// index, both-zero gcd, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A denominator vanished at an evaluation point.
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class NotInvertibleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Caller broke a documented precondition (too few values, max_order < 1, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Creative telescoping found nothing within the search bounds.
class NotFoundError : public std::runtime_error {
public:
    NotFoundError(const std::string& what, std::vector<int> orders_tried)
        : std::runtime_error(what), orders_tried_(std::move(orders_tried)) {}

    const std::vector<int>& orders_tried() const noexcept { return orders_tried_; }

private:
    std::vector<int> orders_tried_;
};

}  // namespace wzcert

#endif
