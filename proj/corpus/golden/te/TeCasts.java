package te;

public class TeCasts {
    public int truncate(double d) {
        return (int) d;
    }

    public double widen(int i) {
        return i;
    }

    public long big(int i) {
        return ((long) i) * 2;
    }

    public char letter(int i) {
        return (char) (i + 65);
    }

    public int narrow(long l) {
        int x = (int) l;
        return x;
    }
}
