#include "mimofbl/exec.hpp"

namespace mimofbl {

const ParallelFor& serial_for() {
  static const ParallelFor loop = [](int count,
                                     const std::function<void(int)>& body) {
    for (int i = 0; i < count; ++i) body(i);
  };
  return loop;
}

}  // namespace mimofbl
