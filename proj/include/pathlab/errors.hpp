#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace pathlab {

// A value left the declared state space (e.g. a positivity constraint, or the
// domain of a solved price map). `where` is the offending coordinate when known.
class DomainViolation : public std::domain_error {
 public:
  explicit DomainViolation(const std::string& what,
                           double where = std::numeric_limits<double>::quiet_NaN())
      : std::domain_error(what), where_(where) {}
  double where() const { return where_; }

 private:
  double where_;
};

// A functional or derivative could not be evaluated; carries the node time.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, double node_time)
      : std::runtime_error(what), node_time_(node_time) {}
  double node_time() const { return node_time_; }

 private:
  double node_time_;
};

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A cylindrical definition failed validation (seam mismatch, bad grid).
class InvalidSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A claimed replicating strategy failed its replication certificate.
class CertificateError : public std::runtime_error {
 public:
  CertificateError(const std::string& what, double checkpoint)
      : std::runtime_error(what), checkpoint_(checkpoint) {}
  double checkpoint() const { return checkpoint_; }

 private:
  double checkpoint_;
};

}  // namespace pathlab
