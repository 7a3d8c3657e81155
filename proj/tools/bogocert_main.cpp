#include "bogocert/jobs.hpp"

int main(int argc, char** argv) { return bogocert::run_main(argc, argv); }
