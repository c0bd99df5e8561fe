#ifndef ODDMINOR_ERRORS_HPP
#define ODDMINOR_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace oddminor {

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class InvalidGraph : public Error
{
public:
    using Error::Error;
};

class MalformedGraph6 : public Error
{
public:
    using Error::Error;
};

class MalformedEdgeList : public Error
{
public:
    using Error::Error;
};

/// The requested operation is outside the supported (desk-scale) range.
class Unsupported : public Error
{
public:
    using Error::Error;
};

class IndexOutOfRange : public Error
{
public:
    using Error::Error;
};

class NotAClique : public Error
{
public:
    using Error::Error;
};

class PreconditionFailed : public Error
{
public:
    using Error::Error;
};

class MalformedCertificate : public Error
{
public:
    using Error::Error;
};

/// A backtracking search exceeded its node budget. Never means "absent".
class SearchTimeout : public Error
{
public:
    explicit SearchTimeout(std::uint64_t budget)
        : Error("search node budget of " + std::to_string(budget) + " exceeded"), budget_(budget)
    {
    }

    std::uint64_t budget() const { return budget_; }

private:
    std::uint64_t budget_;
};

/// Every construction strategy failed and exhaustive search confirmed absence.
class Exhausted : public Error
{
public:
    using Error::Error;
};

} // namespace oddminor

#endif
