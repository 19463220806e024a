package lvs;

public class LvsReport {
    public String render(int n) {
        StringBuilder ss = new StringBuilder();
        ss.append("items: ").append(n).append('\n');
        return ss.toString();
    }
}
