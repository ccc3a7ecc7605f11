#pragma once

#include <stdexcept>
#include <string>

namespace slimlat {

enum class Err {
  Cycle,
  NotTransitivelyReduced,
  NotALattice,
  UnknownElement,
  NotComparable,
  EmptySet,
  SingletonChain,
  NotSlim,
  NotSemimodular,
  NotACell,
  NotDistributiveCell,
  BadMultiplicity,
  NotACorner,
  LayoutInvalid,
  NotIncomparable,
  SizeBound,
  SizeTooLarge,
  NotSublattice,
  NotARetraction,
  PatternMismatch,
  MalformedRecipe,
  Schema,
  Io,
  Internal,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw Error(code, msg); }

}  // namespace slimlat
