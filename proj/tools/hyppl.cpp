#include "cli_config.hpp"
int main(int argc,char**argv){return hyppl::cli::main(argc,argv);}
