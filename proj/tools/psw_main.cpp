#include "psw/cli.hpp"

int main(int argc, char** argv) { return psw::run_cli(argc, argv); }
