/*
 * Copyright 2026 The minrank-keygen Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 */

/* The public header must compile as C. */

#include "minrank/minrank.h"

#include <stdio.h>

int main(void) {
  minrank_params* p = NULL;
  uint64_t bits = 0;
  if (minrank_params_by_name("mirith-Ib", &p) != MINRANK_OK) return 1;
  if (minrank_pk_size_bits(p, 3, &bits) != MINRANK_OK) return 1;
  minrank_params_free(p);
  printf("%llu\n", (unsigned long long)bits);
  return bits == 328 ? 0 : 1;
}
