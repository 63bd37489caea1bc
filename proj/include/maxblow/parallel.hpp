/*
 * Copyright 2026 The Maxblow Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef MAXBLOW_PARALLEL_HPP
#define MAXBLOW_PARALLEL_HPP

#ifdef _OPENMP
#include <omp.h>
#else
inline int omp_get_max_threads() { return 1; }
inline int omp_get_thread_num() { return 0; }
#endif

namespace maxblow {

// Worker count for parallel kernels: MAXBLOW_THREADS caps the OpenMP
// default (0 or unset = auto). Every kernel produces bit-identical output
// for any thread count.
int effective_threads();

}  // namespace maxblow

#endif  // MAXBLOW_PARALLEL_HPP
