#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace anaphora {

// Unknown category, concept, instance or tree position.
class LookupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input file. line() is 0 when not line-specific.
class LoadError : public std::runtime_error {
 public:
  LoadError(const std::string& what, std::string source = {}, std::size_t line = 0)
      : std::runtime_error(format(what, source, line)), source_(std::move(source)), line_(line) {}

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }

 private:
  static std::string format(const std::string& what, const std::string& source, std::size_t line) {
    std::string out;
    if (!source.empty()) out += source + ":";
    if (line != 0) out += std::to_string(line) + ":";
    if (!out.empty()) out += " ";
    return out + what;
  }

  std::string source_;
  std::size_t line_;
};

// Engine-level failure: fan-out cap exceeded, all readings dead, zero survivors.
class ProcessingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Consuming an entity that is not (or no longer) in the Cf list.
class ConsumptionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace anaphora
