#include "cli/app.hpp"

int main(int argc, char** argv) { return vfrac::cli::run_app(argc, argv); }
