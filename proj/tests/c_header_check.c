/* Compiled as C to keep the public header valid C. */
#include "heiscd/heiscd.h"

#include <stdio.h>

int main(void) {
  heiscd_group* g = NULL;
  heiscd_element a = {1, 0, 0};
  heiscd_element b = {0, 0, 1};
  heiscd_element c;
  if (heiscd_group_create(2, 2, &g) != HEISCD_OK) return 1;
  if (heiscd_commutator(g, &a, &b, &c) != HEISCD_OK) return 1;
  heiscd_group_destroy(g);
  printf("[a, b] = (%u,%u,%u)\n", c.c1, c.c2, c.c3);
  return c.c2 == 1 ? 0 : 1;
}
