#pragma once

#include <cstdint>
#include <vector>

#include "besovrates/grid.hpp"
#include "besovrates/rng.hpp"

namespace besovrates {

// =====================================================================
// Space-time white noise on the grid, handled as "cells": the integral
// of the noise over one time step and one spatial cell,
//   cell ~ N(0, h / 2n)  iid.
// The driving term of the scheme is eta = (2n / h) * cell, so that
// h * eta = 2n * cell.
//
// Cells are a pure function of (seed, step, cell index): streaming the
// same step twice gives bit-identical values, and levels coupled to a
// finer grid consume the fine cells through coarsen().
// =====================================================================

/// One time step's worth of cells at grid g. Deterministic in (seed, step).
std::vector<double> stream_fine_noise(const GridSpec& g, std::uint64_t seed,
                                      StepCount step);

/// In-place variant used by the hot loop; out is resized to 2n.
void stream_fine_noise_into(const GridSpec& g, std::uint64_t seed,
                            StepCount step, std::vector<double>& out);

/// A contiguous run of steps of cells at one grid level.
struct CellBlock {
  GridSpec grid;
  StepCount first_step = 0;  // in this level's step units
  std::vector<std::vector<double>> steps;
};

/// Cells at the fine grid covering the given coarse step (R^2 fine steps,
/// R = fine.n / coarse.n).
CellBlock collect_cells(const GridSpec& fine, const GridSpec& coarse,
                        std::uint64_t seed, StepCount coarse_step);

/// One octave of aggregation: 4 time steps x 2 space cells -> 1 cell at
/// half the spatial resolution. Summation order is fixed, so composing
/// octaves is bit-identical no matter how the descent is split.
CellBlock octave_reduce(const CellBlock& b);

/// Repeated octave_reduce down to the target grid (power-of-two ratio).
CellBlock coarsen(const CellBlock& b, const GridSpec& target);

/// The scheme's driving term for one step: eta = (2n / h) * cells,
/// so that Var(eta) = 2n / h.
GridFunction eta_increment(const std::vector<double>& cells,
                           const GridSpec& g);

}  // namespace besovrates
