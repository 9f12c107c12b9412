#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace strongext {

using Vertex = int;

enum class Errc {
  malformed_line,
  loop,
  antiparallel,
  vertex_out_of_range,
  invalid_certificate,
  empty_graph,
  too_small,
  disconnected,
  has_complete_dicut,
  not_strong,
  not_tournament,
  budget_exceeded,
  invalid_input,
  invalid_dice,
};

const char* to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Raised by the text readers; line numbers are 1-based.
class ParseError : public Error {
 public:
  ParseError(Errc code, int line, const std::string& detail)
      : Error(code, "line " + std::to_string(line) + ": " + detail), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// Carries the obstruction so callers can report it.
class CompleteDicutError : public Error {
 public:
  CompleteDicutError(std::vector<Vertex> side, const std::string& what)
      : Error(Errc::has_complete_dicut, what), side_(std::move(side)) {}
  const std::vector<Vertex>& side() const noexcept { return side_; }

 private:
  std::vector<Vertex> side_;
};

}  // namespace strongext
