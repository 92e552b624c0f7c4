#ifndef SUBMAX_OBJECTIVE_HPP
#define SUBMAX_OBJECTIVE_HPP

#include <cstddef>
#include <memory>
#include <string>

#include "submax/data_point.hpp"

namespace submax {

// Mutable evaluation state for one candidate summary.
//
// Contract for every implementation:
//   - value() of the empty state is 0;
//   - peek_gain(e) >= 0 up to numerical noise (monotonicity);
//   - gains shrink as the state grows (submodularity);
//   - commit(e) raises value() by exactly the gain it returns;
//   - clone() yields an independent state: mutating the clone never
//     changes the original.
//
// value() is a cached read; it never re-evaluates the objective.
class ObjectiveState {
 public:
  virtual ~ObjectiveState() = default;

  virtual std::size_t size() const = 0;
  virtual double value() const = 0;

  // f(S u {e}) - f(S) without mutating the state.
  virtual double peek_gain(const DataPoint& e) const = 0;

  // Adds e; returns the applied gain.
  virtual double commit(const DataPoint& e) = 0;

  // f(S \ {u_idx} u {e}) - f(S) without mutating the state.
  virtual double swap_gain(std::size_t idx, const DataPoint& e) const = 0;

  // Replaces item idx with e; returns the change in value().
  virtual double replace(std::size_t idx, const DataPoint& e) = 0;

  // f({e}) for any e, independent of the current contents.  Cheap for the
  // objectives here (no factor work), so run loops treat it as bookkeeping.
  virtual double singleton_value(const DataPoint& e) const = 0;

  virtual std::unique_ptr<ObjectiveState> clone() const = 0;
};

// Factory for fresh empty states; sieve families create many per run.
class Objective {
 public:
  virtual ~Objective() = default;

  virtual std::unique_ptr<ObjectiveState> make_state() const = 0;
  virtual double singleton_value(const DataPoint& e) const = 0;
  virtual std::string name() const = 0;
};

}  // namespace submax

#endif  // SUBMAX_OBJECTIVE_HPP
