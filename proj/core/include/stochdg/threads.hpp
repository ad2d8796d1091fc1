#pragma once

#include <cstddef>
#include <functional>

namespace stochdg {

// Process-wide default worker count used by parallel_for when callers pass 0.
void set_default_workers(int n);
int default_workers();

// Static-chunked parallel loop over [0, n). The body must write only to
// slots indexed by i so that results do not depend on the worker count.
// Exceptions thrown by the body are captured and rethrown on the caller.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body,
                  int workers = 0);

}  // namespace stochdg
