#ifndef EIGENFACTOR_ERRORS_HPP_
#define EIGENFACTOR_ERRORS_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace eigenfactor {

/// Base class for every error the library throws on its own behalf.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A row of an input file could not be parsed. Carries enough context to
/// point the user at the exact file, line, and field.
class ParseError : public Error {
 public:
  ParseError(std::string file, std::size_t line, std::string field, const std::string& what)
      : Error(file + ":" + std::to_string(line) + ": field '" + field + "': " + what),
        file_(std::move(file)),
        line_(line),
        field_(std::move(field)) {}

  const std::string& file() const noexcept { return file_; }
  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::string file_;
  std::size_t line_;
  std::string field_;
};

class DuplicateJournalId : public Error {
 public:
  explicit DuplicateJournalId(const std::string& id, const std::string& context = {})
      : Error("duplicate journal id '" + id + "'" + (context.empty() ? "" : " at " + context)),
        id_(id) {}
  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

class NegativeArticleCount : public Error {
 public:
  explicit NegativeArticleCount(const std::string& id, const std::string& context = {})
      : Error("journal '" + id + "' reports a negative article count" +
              (context.empty() ? "" : " at " + context)),
        id_(id) {}
  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

class UnknownJournal : public Error {
 public:
  explicit UnknownJournal(const std::string& id)
      : Error("edge references unknown journal '" + id + "'"), id_(id) {}
  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

/// A citation edge with a zero, negative, or non-finite count.
class MalformedEdge : public Error {
 public:
  using Error::Error;
};

/// Every journal in the registry reports zero published articles; the
/// article vector would be undefined.
class ZeroTotalArticles : public Error {
 public:
  ZeroTotalArticles() : Error("all journals report zero articles") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A damping parameter outside its admissible range.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// Power iteration exhausted its iteration budget before the residual
/// dropped below tolerance.
class NoConvergence : public Error {
 public:
  NoConvergence(long iterations, double residual)
      : Error("no convergence after " + std::to_string(iterations) +
              " iterations (residual " + std::to_string(residual) + ")"),
        iterations_(iterations),
        residual_(residual) {}

  long iterations() const noexcept { return iterations_; }
  double residual() const noexcept { return residual_; }

 private:
  long iterations_;
  double residual_;
};

/// The weighted-citation vector H*pi is identically zero, so scores cannot
/// be normalized to percentages. Happens when no journal receives citation
/// weight through a non-dangling column.
class NoInternalCitations : public Error {
 public:
  NoInternalCitations() : Error("no internal citation weight: H*pi is the zero vector") {}
};

/// Guard against materializing a dense reference computation on a network
/// too large for it.
class InstanceTooLarge : public Error {
 public:
  explicit InstanceTooLarge(std::ptrdiff_t n)
      : Error("instance of size " + std::to_string(n) + " exceeds the dense reference limit"),
        n_(n) {}
  std::ptrdiff_t size() const noexcept { return n_; }

 private:
  std::ptrdiff_t n_;
};

class SampleTooSmall : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace eigenfactor

#endif  // EIGENFACTOR_ERRORS_HPP_
