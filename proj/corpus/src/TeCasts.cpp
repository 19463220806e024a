class TeCasts {
public:
    int truncate(double d) { return (int) d; }

    double widen(int i) { return i; }

    long big(int i) { return static_cast<long>(i) * 2; }

    char letter(int i) { return (char) (i + 65); }

    int narrow(long l) { int x = l; return x; }
};
