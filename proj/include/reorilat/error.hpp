#pragma once

#include <stdexcept>
#include <string>

namespace reorilat {

enum class ErrorKind {
  parse,
  invalid_dag,
  not_acyclic,
  not_a_lattice,
  not_skeletal,
  not_vertebrate,
  not_pathful,
  not_strongly_pathful,
  not_in_fiber,
  not_a_cover,
  not_join_irreducible,
  not_meet_irreducible,
  invalid_rope,
  invalid_ideal,
  crossing_ropes,
  not_an_interval,
  on_wall,
  non_generic_direction,
  representation_mismatch,
  invalid_configuration,
  too_large,
  usage
};

inline char const* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::parse: return "ParseError";
    case ErrorKind::invalid_dag: return "InvalidDag";
    case ErrorKind::not_acyclic: return "NotAcyclic";
    case ErrorKind::not_a_lattice: return "NotALattice";
    case ErrorKind::not_skeletal: return "NotSkeletal";
    case ErrorKind::not_vertebrate: return "NotVertebrate";
    case ErrorKind::not_pathful: return "NotPathful";
    case ErrorKind::not_strongly_pathful: return "NotStronglyPathful";
    case ErrorKind::not_in_fiber: return "NotInFiber";
    case ErrorKind::not_a_cover: return "NotACover";
    case ErrorKind::not_join_irreducible: return "NotJoinIrreducible";
    case ErrorKind::not_meet_irreducible: return "NotMeetIrreducible";
    case ErrorKind::invalid_rope: return "InvalidRope";
    case ErrorKind::invalid_ideal: return "InvalidIdeal";
    case ErrorKind::crossing_ropes: return "CrossingRopes";
    case ErrorKind::not_an_interval: return "NotAnInterval";
    case ErrorKind::on_wall: return "OnWall";
    case ErrorKind::non_generic_direction: return "NonGenericDirection";
    case ErrorKind::representation_mismatch: return "RepresentationMismatch";
    case ErrorKind::invalid_configuration: return "InvalidConfiguration";
    case ErrorKind::too_large: return "TooLarge";
    case ErrorKind::usage: return "UsageError";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string const& msg)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + msg), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, std::string const& msg) { throw Error(kind, msg); }

}  // namespace reorilat
