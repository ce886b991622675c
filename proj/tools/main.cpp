#include <iostream>

#include <anthem/Cli.h>

int main(int argc, char **argv)
{
	std::ios_base::sync_with_stdio(false);

	return anthem::run({argv + 1, argv + argc}, std::cin, std::cout, std::cerr);
}
