#pragma once

#include <stdexcept>
#include <string>

namespace descartes {

/// Base class of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class ZeroConstantTerm : public Error {
 public:
  ZeroConstantTerm() : Error("polynomial has zero constant term") {}
};

class ZeroCoefficient : public Error {
 public:
  explicit ZeroCoefficient(int index)
      : Error("coefficient a_" + std::to_string(index) + " is zero"), index_(index) {}
  int index() const { return index_; }

 private:
  int index_;
};

class NotARoot : public Error {
 public:
  using Error::Error;
};

class DegreeTooSmall : public Error {
 public:
  using Error::Error;
};

class Incompatible : public Error {
 public:
  using Error::Error;
};

class SearchExhausted : public Error {
 public:
  using Error::Error;
};

class OrderInfeasible : public Error {
 public:
  using Error::Error;
};

class WrongPattern : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Raised when a (3,0) realization is requested for a D(a,b,c) pattern; such
/// couples are certified non-realizable (see certifier::dbis_certificate).
class IsDPattern : public Error {
 public:
  IsDPattern(int a, int b, int c)
      : Error("pattern is D(" + std::to_string(a) + "," + std::to_string(b) + "," +
              std::to_string(c) + ")"),
        a_(a), b_(b), c_(c) {}
  int a() const { return a_; }
  int b() const { return b_; }
  int c() const { return c_; }

 private:
  int a_, b_, c_;
};

}  // namespace descartes
