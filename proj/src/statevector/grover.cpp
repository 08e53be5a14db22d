#include "clausesearch/error.hpp"
#include "clausesearch/state_vector.hpp"

namespace clausesearch {

void grover_step(std::span<Complex> data_state, Index r) {
  if (r >= data_state.size()) fail(ErrorKind::Usage, "solution index out of range");
  data_state[r] = -data_state[r];
  const Complex sum = amplitude_sum(data_state);
  const Complex shift = 2.0 * sum / static_cast<double>(data_state.size());
  for (Complex& a : data_state) a -= shift;
}

}  // namespace clausesearch
