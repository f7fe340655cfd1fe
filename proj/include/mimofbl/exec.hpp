#pragma once

#include <functional>

namespace mimofbl {

// Computation modules never spawn threads; callers that own a worker
// pool inject one through this hook. body(i) must be runnable in any
// order for i in [0, count): everything downstream writes by index and
// reduces in a fixed tree order, so results cannot depend on the
// schedule.
using ParallelFor =
    std::function<void(int count, const std::function<void(int)>& body)>;

// Default executor: plain in-order loop.
const ParallelFor& serial_for();

}  // namespace mimofbl
