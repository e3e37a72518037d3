#include "cli.hpp"

int main(int argc, char** argv) { return vacfocus::cli::run(argc, argv); }
