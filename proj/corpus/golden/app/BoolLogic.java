package app;

public class BoolLogic {
    public boolean a(boolean b) {
        return b;
    }

    public boolean c(boolean b) {
        return b;
    }

    public boolean d(boolean b) {
        return !b;
    }

    public boolean e(boolean b, boolean x) {
        return b || x;
    }

    public boolean f(boolean b) {
        return b;
    }

    public int count(int n) {
        int k = 0;
        if (n != 0) {
            k = 1;
        }
        while (n != 0) {
            n = n - 1;
            k = k + 1;
        }
        return k;
    }

    public boolean flag(int n) {
        return n != 0;
    }

    public int asInt(boolean b) {
        return b? 1: 0;
    }
}
