#ifndef SMALG_ERRORS_HPP
#define SMALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace smalg {

/// Base class for all library errors; `code` is a stable machine tag.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

struct CapacityExceeded : Error {
  explicit CapacityExceeded(const std::string& w) : Error("CapacityExceeded", w) {}
};
struct NotASubgroup : Error {
  explicit NotASubgroup(const std::string& w) : Error("NotASubgroup", w) {}
};
struct NotClosed : Error {
  explicit NotClosed(const std::string& w) : Error("NotClosed", w) {}
};
struct NotAnIdeal : Error {
  explicit NotAnIdeal(const std::string& w) : Error("NotAnIdeal", w) {}
};
struct NotAField : Error {
  explicit NotAField(const std::string& w) : Error("NotAField", w) {}
};
struct NotSubset : Error {
  explicit NotSubset(const std::string& w) : Error("NotSubset", w) {}
};
struct SizeGuard : Error {
  explicit SizeGuard(const std::string& w) : Error("SizeGuard", w) {}
};
struct AxiomFailure : Error {
  explicit AxiomFailure(const std::string& w) : Error("AxiomFailure", w) {}
};
struct ZeroScalar : Error {
  explicit ZeroScalar(const std::string& w) : Error("ZeroScalar", w) {}
};
struct Unsupported : Error {
  explicit Unsupported(const std::string& w) : Error("Unsupported", w) {}
};
struct NonPrimeModulus : Error {
  explicit NonPrimeModulus(const std::string& w) : Error("NonPrimeModulus", w) {}
};
struct ZeroDegree : Error {
  explicit ZeroDegree(const std::string& w) : Error("ZeroDegree", w) {}
};
struct ClassMismatch : Error {
  explicit ClassMismatch(const std::string& w) : Error("ClassMismatch", w) {}
};
struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& w) : Error("DimensionMismatch", w) {}
};
struct NotInLattice : Error {
  explicit NotInLattice(const std::string& w) : Error("NotInLattice", w) {}
};
struct PartialMap : Error {
  explicit PartialMap(const std::string& w) : Error("PartialMap", w) {}
};
struct UnknownLetter : Error {
  explicit UnknownLetter(const std::string& w) : Error("UnknownLetter", w) {}
};
struct Malformed : Error {
  explicit Malformed(const std::string& w) : Error("Malformed", w) {}
};
struct UnknownKind : Error {
  explicit UnknownKind(const std::string& w) : Error("UnknownKind", w) {}
};
struct TableShape : Error {
  explicit TableShape(const std::string& w) : Error("TableShape", w) {}
};
struct Budget : Error {
  explicit Budget(const std::string& w) : Error("Budget", w) {}
};

}  // namespace smalg

#endif  // SMALG_ERRORS_HPP
