public abstract class Abstract6 extends Abstract5 {
}
