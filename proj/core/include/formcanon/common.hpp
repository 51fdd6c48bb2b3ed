// formcanon: exact canonical forms for forms and operators over involutive fields.
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <exception>
#include <random>
#include <string>

namespace formcanon {

// ---------------------------------------------------------------------------
// Errors.
//
// invalid_input_error: the caller violated a documented precondition (bad
//   field/scalar encoding, mismatched dimensions, a form that is not
//   Hermitian, ...). CLI maps these to exit code 2.
// unsupported_error: the request is well-formed but outside what the library
//   handles (characteristic 2, unknown field tag, ...). Also exit code 2.
// internal_error: an exact self-check failed; the library refuses to emit an
//   unverified result. This indicates a bug, not bad input. Exit code 3.
// ---------------------------------------------------------------------------

class formcanon_error : public std::exception {
public:
  explicit formcanon_error(std::string msg) : msg_(std::move(msg)) {}
  const char* what() const noexcept override { return msg_.c_str(); }

private:
  std::string msg_;
};

class invalid_input_error : public formcanon_error {
public:
  using formcanon_error::formcanon_error;
};

class unsupported_error : public formcanon_error {
public:
  using formcanon_error::formcanon_error;
};

class internal_error : public formcanon_error {
public:
  using formcanon_error::formcanon_error;
};

// Throws internal_error when an exact self-check fails. Use for invariants
// that must hold if the mathematics is implemented correctly.
inline void require_internal(bool ok, const char* what) {
  if (!ok) throw internal_error(std::string("internal check failed: ") + what);
}

inline void require_input(bool ok, const std::string& what) {
  if (!ok) throw invalid_input_error(what);
}

// ---------------------------------------------------------------------------
// Deterministic RNG. Every randomized routine takes an explicit seed or an
// rng so results are reproducible; the CLI seeds from FORMCANON_SEED.
// ---------------------------------------------------------------------------

class rng {
public:
  explicit rng(std::uint64_t seed) : eng_(seed) {}

  // Uniform value in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) {
    std::uniform_int_distribution<std::uint64_t> d(0, n - 1);
    return d(eng_);
  }
  // Uniform value in [lo, hi] inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    std::uniform_int_distribution<std::int64_t> d(lo, hi);
    return d(eng_);
  }
  std::mt19937_64& engine() { return eng_; }

private:
  std::mt19937_64 eng_;
};

inline constexpr std::uint64_t default_seed = 20260814u;

}  // namespace formcanon
