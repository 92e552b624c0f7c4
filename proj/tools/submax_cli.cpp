#include "cli_app.hpp"

int main(int argc, char** argv) {
  return submax::cli::cli_main(argc, argv);
}
