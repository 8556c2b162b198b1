public class S030 extends Abstract9 {
    public void open() {
        send("msg5");
        send("msg1");
        send("msg2");
    }

    public void close() {
        log("trace");
    }

    public void start() {
        send("msg4");
    }

    public void stop() {
        new S049();
    }

    public void tick() {
        new S040();
    }

    public void reset() {
        try {
            new S025();
        } catch (IllegalStateException e) {
            send("msg3");
        } finally {
            new S081();
            new S049();
        }
        try {
            send("msg5");
        } catch (IllegalStateException e) {
            switch (event) {
                case EV2:
                    switch (event) {
                        case EV2:
                            update();
                            new S073();
                            break;
                        case EV0:
                            new S078();
                            new S001();
                            log("trace");
                            break;
                    }
                    new S026();
                    new S079();
                    break;
                case EV3:
                    try {
                        send("msg5");
                    } catch (TimeoutException e) {
                        log("trace");
                    } finally {
                        send("msg1");
                    }
                    send("msg3");
                    break;
                case EV0:
                    new Abstract20();
                    new S085();
                    try {
                        send("msg6");
                        send("msg0");
                        update();
                    } catch (TimeoutException e) {
                        new S096();
                        send("msg6");
                        send("msg4");
                    } finally {
                        send("msg5");
                        new S083();
                    }
                    break;
            }
        } catch (IOException e) {
            send("msg4");
        }
        new Abstract11();
    }

    public void pause() {
        send("msg0");
    }

    public void resume() {
        send("msg7");
        update();
    }

    public void load() {
        switch (event) {
            case EV4:
                try {
                    new S031();
                } catch (IOException e) {
                    new S071();
                } finally {
                    switch (event) {
                        case EV2:
                            send("msg4");
                            send("msg0");
                            log("trace");
                            break;
                        case EV5:
                            update();
                            new S012();
                            break;
                    }
                    new S079();
                    new S029();
                }
                switch (event) {
                    case EV3:
                        if (counter > 8) {
                            new S037();
                            new S068();
                        } else {
                            log("trace");
                        }
                        break;
                }
                new S003();
                break;
            case EV5:
                new S039();
                break;
            case EV2:
                send("msg6");
                try {
                    new Abstract12();
                    update();
                } catch (IOException e) {
                    switch (event) {
                        case EV2:
                            log("trace");
                            break;
                        case EV4:
                            new S054();
                            break;
                    }
                } catch (IllegalStateException e) {
                    new S098();
                    try {
                        log("trace");
                        send("msg2");
                        log("trace");
                    } catch (TimeoutException e) {
                        log("trace");
                        new S078();
                        send("msg3");
                    } finally {
                        update();
                    }
                    switch (event) {
                        case EV0:
                            new S021();
                            new S062();
                            break;
                        case EV2:
                            send("msg0");
                            send("msg6");
                            break;
                        case EV4:
                            new S033();
                            break;
                        default:
                            new S077();
                            new S088();
                            break;
                    }
                } finally {
                    send("msg6");
                }
                send("msg4");
                break;
        }
        send("msg4");
        log("trace");
    }

    public void save() {
        send("msg2");
        send("msg5");
        if (counter > 0) {
            new S098();
            send("msg4");
        } else {
            new S094();
            new S013();
            new S070();
        }
    }
}
