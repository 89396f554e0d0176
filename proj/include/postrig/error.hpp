#ifndef POSTRIG_ERROR_HPP
#define POSTRIG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace postrig {

// Base of every error raised by the library. Callers that only care about
// "something numerical went wrong" catch this.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// A parameter lies outside the domain an operation is defined on.
class DomainError : public Error
{
public:
    using Error::Error;
};

// Wrong number of coefficients, mismatched lengths.
class SizeError : public Error
{
public:
    using Error::Error;
};

// Argument sits on a pole (Gamma at a non-positive integer, a hypergeometric
// denominator parameter that is a non-positive integer).
class PoleError : public Error
{
public:
    using Error::Error;
};

// f(lo) and f(hi) have the same sign.
class BracketError : public Error
{
public:
    using Error::Error;
};

// An iterative procedure did not meet its tolerance in the allotted work.
class ConvergenceError : public Error
{
public:
    using Error::Error;
};

// A defining equation has no root in the range the constant is defined on.
class RootOutOfRange : public Error
{
public:
    using Error::Error;
};

} // namespace postrig

#endif
