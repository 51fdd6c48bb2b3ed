// formcanon: exact canonical forms for forms and operators over involutive fields.
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "formcanon/smith.hpp"

namespace formcanon {

// ---------------------------------------------------------------------------
// Kronecker decomposition of matrix pairs (pencils). A pair (A, B) of r x c
// matrices is reduced by invertible P (r x r) and Q (c x c) to a direct sum
// of the canonical indecomposable pairs
//
//   row_strip(m):      (N1, N2)          m x (m+1), m >= 0
//   col_strip(m):      (N2^T, N1^T)      (m+1) x m, m >= 0
//   regular(p, s):     (Phi, I)          Phi the companion matrix of p^s
//   nilpotent_pair(n): (I, J_n(0))
//
// where N1 = [I|0] has ones on the diagonal and N2 = [0|I] ones on the
// superdiagonal of an m x (m+1) strip. The block multiset is a complete
// equivalence invariant; P and Q are exact certificates.
// ---------------------------------------------------------------------------

// The m x (m+1) strips (m >= 0 gives an empty 0 x 1 strip).
matrix strip_n1(const field& f, int m);
matrix strip_n2(const field& f, int m);

enum class pencil_block_kind { row_strip, col_strip, regular, nilpotent_pair };

struct pencil_block {
  field fld;
  pencil_block_kind kind = pencil_block_kind::regular;
  int m = 0;   // strip parameter (row_strip: m x (m+1), col_strip: (m+1) x m)
  poly p;      // regular only: monic irreducible
  int s = 0;   // regular: power of p; nilpotent_pair: the block size n

  static pencil_block make_row_strip(const field& f, int m);
  static pencil_block make_col_strip(const field& f, int m);
  static pencil_block make_regular(const poly& p, int s);
  static pencil_block make_nilpotent(const field& f, int n);

  std::size_t rows() const;
  std::size_t cols() const;
  std::pair<matrix, matrix> to_matrices() const;

  friend bool operator==(const pencil_block& a, const pencil_block& b);
  // Canonical block order: row strips (m ascending), col strips (m ascending),
  // regular (p ascending by poly::compare, s descending), nilpotent pairs
  // (n ascending). Returns -1/0/+1.
  static int compare(const pencil_block& a, const pencil_block& b);
};

struct pencil_decomposition {
  std::vector<pencil_block> blocks;  // in canonical order
  matrix p, q;  // verified: p * A * q and p * B * q equal assembled()

  // The block-diagonal pair (direct sums of first/second components).
  std::pair<matrix, matrix> assembled(const field& f) const;
};

// Decomposes (a, b) and verifies the certificate exactly before returning.
pencil_decomposition kronecker_decompose(const matrix& a, const matrix& b,
                                         std::uint64_t seed = default_seed);

// ---------------------------------------------------------------------------
// Morphisms of matrix-tuple representations: given X = (X_1, ..., X_k) with
// all X_alpha of size rX x cX and Y likewise, a morphism is a pair (g, h)
// with h X_alpha = Y_alpha g for every alpha (g: cY x cX, h: rY x rX). For
// X = Y these are the endomorphisms acting as (domain, codomain) pairs.
// ---------------------------------------------------------------------------

struct rep_morphism {
  matrix g, h;
};

std::vector<rep_morphism> morphism_space(const std::vector<matrix>& x,
                                         const std::vector<matrix>& y);

}  // namespace formcanon
