// placeholder — CLI under construction
int main() { return 2; }
