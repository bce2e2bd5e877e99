/* Compiled as C: the public header must not leak C++ into C consumers. */
#include <fpg/fpg.h>

#include <stdio.h>
#include <string.h>

int main(void) {
  if (fpg_word_wdeg("01") != 3) return 1;
  fpg_series* s = NULL;
  if (fpg_series_parse("{\"max_degree\": 2, \"terms\": {\"1\": \"2\"}}", &s) !=
      FPG_OK)
    return 1;
  char* text = NULL;
  if (fpg_series_format(s, &text) != FPG_OK) return 1;
  int ok = strstr(text, "\"1\":\"2\"") != NULL;
  fpg_string_free(text);
  fpg_series_free(s);
  if (!ok) return 1;
  printf("c header ok (version %s)\n", fpg_version());
  return 0;
}
