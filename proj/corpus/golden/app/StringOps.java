package app;

public class StringOps {
    public char lastChar(String str) {
        char last_char;
        last_char = str.charAt(str.length() - 1);
        return last_char;
    }

    public int where(String s, String t, long n) {
        return s.indexOf(t, (int) n);
    }

    public int whereChar(String s, char c, int n) {
        return s.indexOf(c, n);
    }

    public boolean same(String a, String b) {
        return a.equals(b);
    }

    public boolean isEmpty(String s) {
        return s.isEmpty();
    }
}
