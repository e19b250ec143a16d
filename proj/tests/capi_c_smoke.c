/* The public header must compile and work as plain C. */
#include <skewtab/skewtab.h>

#include <stdio.h>
#include <string.h>

int main(void) {
  skewtab_partition* mu = NULL;
  char* value = NULL;
  if (skewtab_partition_parse("3,2,1", &mu) != SKEWTAB_OK) return 1;
  if (skewtab_hook_count(mu, &value) != SKEWTAB_OK) return 1;
  if (strcmp(value, "16") != 0) {
    fprintf(stderr, "expected 16, got %s\n", value);
    return 1;
  }
  skewtab_string_free(value);
  skewtab_partition_free(mu);
  if (skewtab_partition_parse("2,3", &mu) != SKEWTAB_PARSE_ERROR) return 1;
  printf("skewtab %s ok\n", skewtab_version());
  return 0;
}
